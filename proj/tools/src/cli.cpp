#include "circstab_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "circstab/census.hpp"
#include "circstab/report_json.hpp"
#include "circstab_cli/acceptance.hpp"

namespace circstab::cli {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

void emit(const CliConfig& config, const std::string& text, std::ostream& out) {
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out, std::ios::trunc);
  file << text;
  file.flush();
  if (!file) throw IoError("cannot write " + config.out);
}

std::vector<std::string> wilson_labels(const WilsonTypes& w) {
  std::vector<std::string> out;
  if (w.c1) out.push_back("C1(h=" + std::to_string(*w.c1) + ")");
  if (w.c2) out.push_back("C2(h=" + std::to_string(*w.c2) + ")");
  if (w.c3) {
    out.push_back("C3(H=<" + std::to_string(w.c3->h.generator()) + ">,d=" + std::to_string(w.c3->d) + ")");
  }
  if (w.c4) out.push_back("C4(m=" + std::to_string(*w.c4) + ")");
  return out;
}

std::vector<std::string> condition_labels(const NewConditions& c) {
  std::vector<std::string> out;
  if (c.general_hk) {
    out.push_back("general-hk(variant=" + std::to_string(c.general_hk->variant) + ",H=<" +
                  std::to_string(c.general_hk->h.generator()) + ">,K=<" +
                  std::to_string(c.general_hk->k.generator()) + ">)");
  }
  if (c.iso_translate) {
    std::string s = "iso-translate(" + to_string(c.iso_translate->method);
    if (c.iso_translate->method == IsoMethod::multiplier) s += ",m=" + std::to_string(c.iso_translate->multiplier);
    out.push_back(s + ")");
  }
  if (c.xe_c4) out.push_back("xe-c4(m=" + std::to_string(*c.xe_c4) + ")");
  if (c.xe_general) {
    out.push_back("xe-general(" + to_string(c.xe_general->family) + ",H=<" +
                  std::to_string(c.xe_general->h.generator()) + ">)");
  }
  return out;
}

std::string or_dash(const std::vector<std::string>& v, const std::string& sep) {
  return v.empty() ? "-" : join(v, sep);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> read_literals(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

std::string render_census_text(const CensusSummary& s) {
  std::ostringstream out;
  out << "order  unstable  C1  C2  C3  C4  HK  iso  xe  no-wilson  unexplained\n";
  for (const OrderSummary& o : s.orders) {
    char line[160];
    std::snprintf(line, sizeof line, "%5d  %8d  %2d  %2d  %2d  %2d  %2d  %3d  %2d  %9d  %11d\n", o.n,
                  o.nontrivially_unstable, o.c1, o.c2, o.c3, o.c4, o.general_hk, o.iso_translate, o.xe,
                  o.no_wilson_type, o.unexplained);
    out << line;
  }
  for (const OrderSummary& o : s.orders) {
    for (const ConnectionSet& set : o.no_wilson_sets) out << "no-wilson-type " << set.to_literal() << '\n';
    for (const ConnectionSet& set : o.unexplained_sets) out << "unexplained " << set.to_literal() << '\n';
  }
  out << '\n' << compare_to_paper(s).to_text();
  return out.str();
}

}  // namespace

std::string render_report_text(const StabilityReport& r) {
  std::vector<std::string> reasons;
  for (TrivialityReason t : r.triviality_reasons) reasons.push_back(to_string(t));
  std::vector<std::string> sources;
  for (const Witness& w : r.witnesses) sources.push_back(w.source);
  std::vector<std::string> flags;
  if (r.even_part_empty) flags.push_back("even-part-empty");
  if (r.odd_part_empty) flags.push_back("odd-part-empty");
  if (r.aux_loops) flags.push_back("aux-loops");
  if (r.unexplained) flags.push_back("unexplained");

  std::ostringstream out;
  out << "graph       " << r.connection.to_literal() << '\n'
      << "verdict     " << to_string(r.verdict) << '\n'
      << "reasons     " << or_dash(reasons, ", ") << '\n'
      << "|Aut X|     " << r.aut_x << '\n'
      << "|Aut BX|    " << r.aut_bx << '\n'
      << "wilson      " << or_dash(wilson_labels(r.wilson), " ") << '\n'
      << "conditions  " << or_dash(condition_labels(r.conditions), " ") << '\n'
      << "witnesses   " << or_dash(sources, ", ") << '\n'
      << "flags       " << or_dash(flags, ", ") << '\n';
  return out.str();
}

int cmd_analyze(const CliConfig& config, std::ostream& out, std::ostream&) {
  std::vector<std::string> literals = config.literals;
  if (!config.input_file.empty()) {
    const auto more = read_literals(config.input_file);
    literals.insert(literals.end(), more.begin(), more.end());
  }
  if (literals.empty()) throw ParseError("analyze needs a connection set literal or --input");

  VerdictOptions options;
  options.iso.force_canonical = config.force_canonical;
  std::vector<StabilityReport> reports;
  for (const std::string& lit : literals) {
    reports.push_back(stability_verdict(CirculantGraph{ConnectionSet::parse(lit)}, options));
  }

  std::string text;
  switch (config.format) {
    case Format::json:
      if (reports.size() == 1) {
        text = report_to_json(reports.front()) + "\n";
      } else {
        std::vector<std::string> parts;
        for (const auto& r : reports) parts.push_back(report_to_json(r));
        text = "[\n" + join(parts, ",\n") + "\n]\n";
      }
      break;
    case Format::csv:
      text = "connection_set,verdict,aut_x,aut_bx,triviality_reasons,wilson_types,new_conditions,unexplained\n";
      for (const auto& r : reports) {
        std::vector<std::string> reasons;
        for (TrivialityReason t : r.triviality_reasons) reasons.push_back(to_string(t));
        std::ostringstream row;
        row << csv_field(r.connection.to_literal()) << ',' << to_string(r.verdict) << ',' << r.aut_x << ','
            << r.aut_bx << ',' << csv_field(join(reasons, ";")) << ','
            << csv_field(join(wilson_labels(r.wilson), ";")) << ','
            << csv_field(join(condition_labels(r.conditions), ";")) << ',' << (r.unexplained ? "true" : "false")
            << '\n';
        text += row.str();
      }
      break;
    case Format::text:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) text += '\n';
        text += render_report_text(reports[i]);
      }
      break;
  }
  emit(config, text, out);
  return kExitOk;
}

int cmd_census(const CliConfig& config, std::ostream& out, std::ostream& err) {
  CensusOptions options;
  options.workers = config.jobs;
  options.extended = config.extended;
  options.cache_dir = config.cache_dir;
  if (config.progress) {
    options.progress = [&err](int n, std::size_t done, std::size_t total) {
      err << "order " << n << ": " << done << '/' << total << " chunks\n" << std::flush;
    };
  }
  const CensusSummary summary = run_census(config.min_n, config.max_n, options);

  std::string text;
  switch (config.format) {
    case Format::json: text = summary_to_json(summary); break;
    case Format::csv: text = summary_to_csv(summary); break;
    case Format::text: text = render_census_text(summary); break;
  }
  emit(config, text, out);
  const std::string line = "total_nontrivially_unstable=" + std::to_string(summary.total()) + "\n";
  // Keep machine-readable stdout parseable.
  (config.out.empty() && config.format != Format::text ? err : out) << line;
  return kExitOk;
}

int cmd_verify_paper(const CliConfig& config, std::ostream& out, std::ostream&) {
  AcceptanceOptions options;
  options.workers = config.jobs;
  options.extended = config.extended;
  options.cache_dir = config.cache_dir;
  options.on_result = [&out](const CriterionResult& r) { out << format_result(r) << '\n' << std::flush; };
  const auto results = run_acceptance(options);
  const bool ok = all_required_pass(results);
  out << (ok ? "all required criteria pass" : "some required criteria FAIL") << '\n';
  return ok ? kExitOk : kExitFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability of circulant graphs under the canonical bipartite double cover"};
  app.require_subcommand(1);
  CliConfig config;
  config.jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};

  auto* analyze = app.add_subcommand("analyze", "Stability report for one or more circulants");
  analyze->add_option("sets", config.literals, "Connection sets such as 10:1,2,8,9");
  analyze->add_option("--input", config.input_file, "File with one connection set per line");
  analyze->add_option("--format", config.format, "json, csv or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("json");
  analyze->add_option("--out", config.out, "Write the report here instead of stdout");
  analyze->add_flag("--force-canonical", config.force_canonical,
                    "Run the canonical-form isomorphism test even when multipliers suffice");

  auto* census = app.add_subcommand("census", "Enumerate nontrivially unstable circulants by order");
  census->add_option("--min", config.min_n, "Smallest order")->required();
  census->add_option("--max", config.max_n, "Largest order")->required();
  census->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  census->add_option("--format", config.format, "json, csv or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  census->add_option("--out", config.out, "Write the summary here instead of stdout");
  census->add_flag("--extended", config.extended, "Allow orders above 38");
  census->add_option("--cache-dir", config.cache_dir, "Resumable per-order cache");
  census->add_flag("--progress", config.progress, "Report finished chunks on stderr");

  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance criteria");
  verify->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--extended", config.extended, "Include the hours-long orders 39..50");
  verify->add_option("--cache-dir", config.cache_dir, "Cache for the extended census");

  bool analyze_format_given = false;
  try {
    app.parse(argc, argv);
    analyze_format_given = analyze->count("--format") > 0;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitParse;
  }
  if (*analyze && !analyze_format_given) config.format = Format::json;

  try {
    if (*analyze) return cmd_analyze(config, out, err);
    if (*census) return cmd_census(config, out, err);
    return cmd_verify_paper(config, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace circstab::cli
