#include "circstab/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace circstab {

namespace {

constexpr int kLowBitsMax = 14;
constexpr const char* kCacheTag = "#circstab-census";
constexpr const char* kDefaultExtendedCache = ".circstab-cache";

struct FlagName {
  const char* name;
  bool ConditionFlags::*member;
};

constexpr FlagName kFlagNames[] = {
    {"C1", &ConditionFlags::c1},
    {"C2", &ConditionFlags::c2},
    {"C3", &ConditionFlags::c3},
    {"C4", &ConditionFlags::c4},
    {"general-hk", &ConditionFlags::general_hk},
    {"iso-translate", &ConditionFlags::iso_translate},
    {"xe-c4", &ConditionFlags::xe_c4},
    {"xe-general", &ConditionFlags::xe_general},
    {"unexplained", &ConditionFlags::unexplained},
    {"aux-loops", &ConditionFlags::aux_loops},
    {"even-part-empty", &ConditionFlags::even_part_empty},
    {"odd-part-empty", &ConditionFlags::odd_part_empty},
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& text, const char* what) {
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(std::string("bad ") + what + ": '" + text + "'");
  }
  return std::stoi(text);
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(const std::string& text) {
  if (text.size() % 2 != 0) throw ParseError("odd-length certificate");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ParseError(std::string("bad hex digit '") + c + "'");
  };
  std::vector<std::uint8_t> out(text.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(text[2 * i]) << 4 | nibble(text[2 * i + 1]));
  }
  return out;
}

Verdict verdict_from_string(const std::string& text) {
  for (Verdict v : {Verdict::stable, Verdict::trivially_unstable, Verdict::nontrivially_unstable}) {
    if (to_string(v) == text) return v;
  }
  throw ParseError("unknown verdict '" + text + "'");
}

std::string set_csv(const ResidueSet& s) {
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v);
  });
  return out;
}

std::uint64_t rotate(std::uint64_t bits, int h, int n) {
  if (h == 0) return bits;
  return ((bits << h) | (bits >> (n - h))) & modulus_mask(n);
}

// Everything about order n that the per-set filters share.
struct OrderPlan {
  int n = 0;
  std::vector<std::uint64_t> pair_bits;  // bit mask of the j-th negation pair
  std::vector<int> pair_rep;             // its smaller element
  std::uint64_t even_mask = 0;
  std::vector<int> twin_shifts;          // n/p for the primes p dividing n
  std::vector<Multiplier> multipliers;   // units 1 < m < n/2
  int low_bits = 0;
  std::size_t chunks = 1;
  bool ci = true;

  explicit OrderPlan(int order) : n(order) {
    for (int s = 1; 2 * s <= n; ++s) {
      if (2 * s == n) {
        pair_bits.push_back(std::uint64_t{1} << s);
      } else {
        pair_bits.push_back((std::uint64_t{1} << s) | (std::uint64_t{1} << (n - s)));
      }
      pair_rep.push_back(s);
    }
    even_mask = even_residue_mask(n);
    for (int p = 2; p <= n; ++p) {
      if (n % p == 0 && is_prime(p)) twin_shifts.push_back(n / p);
    }
    units(n).for_each([&](int m) {
      if (m > 1 && 2 * m < n) multipliers.emplace_back(n, m);
    });
    const int k = static_cast<int>(pair_bits.size());
    low_bits = std::min(k, kLowBitsMax);
    chunks = std::size_t{1} << (k - low_bits);
    ci = has_ci_guarantee(n);
  }

  std::uint64_t set_bits(std::uint64_t mask) const {
    std::uint64_t bits = 0;
    for (std::uint64_t b = mask; b != 0; b &= b - 1) bits |= pair_bits[std::countr_zero(b)];
    return bits;
  }

  bool connected(std::uint64_t mask) const {
    int g = n;
    for (std::uint64_t b = mask; b != 0 && g != 1; b &= b - 1) {
      g = std::gcd(g, pair_rep[std::countr_zero(b)]);
    }
    return g == 1;
  }

  bool twin_free(std::uint64_t bits) const {
    return std::none_of(twin_shifts.begin(), twin_shifts.end(),
                        [&](int h) { return rotate(bits, h, n) == bits; });
  }

  bool multiplier_minimal(std::uint64_t bits) const {
    return std::all_of(multipliers.begin(), multipliers.end(),
                       [&](const Multiplier& m) { return m.apply(bits) >= bits; });
  }
};

// Nontrivially unstable survivors of one chunk, in increasing bit mask order.
std::vector<CensusRecord> run_chunk(const OrderPlan& plan, std::size_t chunk) {
  std::vector<CensusRecord> out;
  const int n = plan.n;
  const std::uint64_t base = static_cast<std::uint64_t>(chunk) << plan.low_bits;
  const std::uint64_t span = std::uint64_t{1} << plan.low_bits;
  // Increasing pair masks do not give increasing set masks, so sort at the end.
  for (std::uint64_t low = 0; low < span; ++low) {
    const std::uint64_t mask = base | low;
    if (n > 1 && !plan.connected(mask)) continue;
    const std::uint64_t bits = plan.set_bits(mask);
    if (n % 2 == 0 && (bits & plan.even_mask) == 0) continue;
    if (!plan.twin_free(bits)) continue;
    if (!plan.multiplier_minimal(bits)) continue;

    const CirculantGraph x{ConnectionSet(ResidueSet(n, bits))};
    VerdictOptions quick;
    quick.annotate = false;
    StabilityReport report = stability_verdict(x, quick);
    if (report.verdict != Verdict::nontrivially_unstable) continue;
    annotate_conditions(x, report);

    CensusRecord rec;
    rec.n = n;
    rec.canonical_set = x.connection;
    rec.certificate = analyze(x.to_colored()).canonical_certificate;
    rec.verdict = report.verdict;
    rec.flags = flags_of(report);
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const CensusRecord& a, const CensusRecord& b) {
    return a.canonical_set.bits() < b.canonical_set.bits();
  });
  return out;
}

// ---- cache ----------------------------------------------------------------------

std::string cache_header(const OrderPlan& plan) {
  return std::string(kCacheTag) + " n=" + std::to_string(plan.n) +
         " chunks=" + std::to_string(plan.chunks) + " low=" + std::to_string(plan.low_bits);
}

struct CacheState {
  std::map<std::size_t, std::vector<CensusRecord>> done;
  bool complete = false;
};

// Reads what a previous run left behind and rewrites the file without any
// trailing partial chunk. A file with a different header is started afresh.
CacheState load_cache(const std::filesystem::path& file, const OrderPlan& plan) {
  CacheState state;
  std::vector<std::string> kept;
  const std::string header = cache_header(plan);
  {
    std::ifstream in(file);
    if (in) {
      std::string line;
      std::vector<CensusRecord> pending;
      std::vector<std::string> pending_lines;
      bool valid = std::getline(in, line) && line == header;
      while (valid && std::getline(in, line)) {
        if (line == "#complete") {
          state.complete = state.done.size() == plan.chunks;
          if (state.complete) kept.push_back(line);
          break;
        }
        if (line.rfind("#done ", 0) == 0) {
          const auto parts = split(line.substr(6), ' ');
          std::size_t chunk = 0;
          int count = -1;
          try {
            if (parts.size() == 2) {
              chunk = static_cast<std::size_t>(parse_int(parts[0], "chunk"));
              count = parse_int(parts[1], "count");
            }
          } catch (const ParseError&) {
            count = -1;
          }
          if (count != static_cast<int>(pending.size()) || chunk >= plan.chunks) break;
          state.done[chunk] = std::move(pending);
          pending.clear();
          kept.insert(kept.end(), pending_lines.begin(), pending_lines.end());
          kept.push_back(line);
          pending_lines.clear();
          continue;
        }
        try {
          CensusRecord rec = record_from_cache_line(line);
          if (rec.n != plan.n) break;
          pending.push_back(std::move(rec));
          pending_lines.push_back(line);
        } catch (const ParseError&) {
          break;
        }
      }
    }
  }
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw IoError("cannot write census cache " + file.string());
  out << header << '\n';
  for (const std::string& line : kept) out << line << '\n';
  if (!out) throw IoError("cannot write census cache " + file.string());
  return state;
}

class CacheWriter {
 public:
  explicit CacheWriter(const std::filesystem::path& file) : file_(file) {}

  void append_chunk(std::size_t chunk, const std::vector<CensusRecord>& records) {
    std::string block;
    for (const CensusRecord& rec : records) block += record_to_cache_line(rec) + '\n';
    block += "#done " + std::to_string(chunk) + ' ' + std::to_string(records.size()) + '\n';
    write(block);
  }

  void finish() { write("#complete\n"); }

 private:
  void write(const std::string& text) {
    std::lock_guard lock(mutex_);
    std::ofstream out(file_, std::ios::app);
    out << text;
    out.flush();
    if (!out) throw IoError("cannot append to census cache " + file_.string());
  }

  std::filesystem::path file_;
  std::mutex mutex_;
};

OrderSummary summarize(int n, const std::vector<CensusRecord>& records) {
  OrderSummary o;
  o.n = n;
  for (const CensusRecord& r : records) {
    if (r.n != n) continue;
    ++o.nontrivially_unstable;
    const ConditionFlags& f = r.flags;
    o.c1 += f.c1;
    o.c2 += f.c2;
    o.c3 += f.c3;
    o.c4 += f.c4;
    o.general_hk += f.general_hk;
    o.iso_translate += f.iso_translate;
    o.xe += f.xe_c4 || f.xe_general;
    o.unexplained += f.unexplained;
    o.aux_loops += f.aux_loops;
    if (r.no_wilson_type()) {
      ++o.no_wilson_type;
      o.no_wilson_sets.push_back(r.canonical_set);
    }
    if (f.unexplained) o.unexplained_sets.push_back(r.canonical_set);
  }
  return o;
}

std::string format_set(const ConnectionSet& s) { return s.to_literal(); }

}  // namespace

// ---- flags and cache lines ------------------------------------------------------

ConditionFlags flags_of(const StabilityReport& report) {
  ConditionFlags f;
  f.c1 = report.wilson.c1.has_value();
  f.c2 = report.wilson.c2.has_value();
  f.c3 = report.wilson.c3.has_value();
  f.c4 = report.wilson.c4.has_value();
  f.general_hk = report.conditions.general_hk.has_value();
  f.iso_translate = report.conditions.iso_translate.has_value();
  f.xe_c4 = report.conditions.xe_c4.has_value();
  f.xe_general = report.conditions.xe_general.has_value();
  f.unexplained = report.unexplained;
  f.aux_loops = report.aux_loops;
  f.even_part_empty = report.even_part_empty;
  f.odd_part_empty = report.odd_part_empty;
  return f;
}

std::string flags_to_csv(const ConditionFlags& flags) {
  std::string out;
  for (const FlagName& f : kFlagNames) {
    if (!(flags.*f.member)) continue;
    if (!out.empty()) out.push_back(',');
    out += f.name;
  }
  return out;
}

ConditionFlags flags_from_csv(const std::string& csv) {
  ConditionFlags flags;
  if (csv.empty()) return flags;
  for (const std::string& name : split(csv, ',')) {
    const auto it = std::find_if(std::begin(kFlagNames), std::end(kFlagNames),
                                 [&](const FlagName& f) { return name == f.name; });
    if (it == std::end(kFlagNames)) throw ParseError("unknown flag '" + name + "'");
    flags.*(it->member) = true;
  }
  return flags;
}

std::string record_to_cache_line(const CensusRecord& record) {
  return std::to_string(record.n) + ';' + set_csv(record.canonical_set.members()) + ';' +
         to_hex(record.certificate) + ';' + to_string(record.verdict) + ';' +
         flags_to_csv(record.flags);
}

CensusRecord record_from_cache_line(const std::string& line) {
  const auto fields = split(line, ';');
  if (fields.size() != 5) throw ParseError("cache line needs 5 fields: '" + line + "'");
  CensusRecord rec;
  rec.n = parse_int(fields[0], "order");
  if (rec.n < 1 || rec.n > kMaxModulus) throw ParseError("order out of range: '" + line + "'");
  ResidueSet members(rec.n);
  if (!fields[1].empty()) {
    for (const std::string& v : split(fields[1], ',')) {
      const int x = parse_int(v, "residue");
      if (x >= rec.n) throw ParseError("residue out of range: '" + line + "'");
      members.insert(x);
    }
  }
  try {
    rec.canonical_set = ConnectionSet(members);
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad connection set: ") + e.what());
  }
  rec.certificate = from_hex(fields[2]);
  rec.verdict = verdict_from_string(fields[3]);
  rec.flags = flags_from_csv(fields[4]);
  return rec;
}

ConnectionSet canonical_multiplier_set(const ConnectionSet& s) {
  const int n = s.order();
  std::uint64_t best = s.bits();
  units(n).for_each([&](int m) { best = std::min(best, scale_set(s.members(), m).bits()); });
  return ConnectionSet(ResidueSet(n, best));
}

// ---- enumeration ------------------------------------------------------------------

std::vector<CensusRecord> enumerate_order(int n, const CensusOptions& options) {
  require_modulus(n);
  if (2 * n > kMaxVertices) {
    throw CapExceeded("order " + std::to_string(n) + " exceeds the double cover cap");
  }
  const OrderPlan plan(n);
  std::vector<std::vector<CensusRecord>> results(plan.chunks);
  std::vector<char> have(plan.chunks, 0);

  std::unique_ptr<CacheWriter> writer;
  bool complete = false;
  if (!options.cache_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(options.cache_dir, ec);
    if (ec) throw IoError("cannot create cache directory " + options.cache_dir.string());
    const auto file = options.cache_dir / ("order-" + std::to_string(n) + ".txt");
    CacheState state = load_cache(file, plan);
    for (auto& [chunk, recs] : state.done) {
      results[chunk] = std::move(recs);
      have[chunk] = 1;
    }
    complete = state.complete;
    writer = std::make_unique<CacheWriter>(file);
  }

  std::vector<std::size_t> todo;
  for (std::size_t c = 0; c < plan.chunks; ++c) {
    if (!have[c]) todo.push_back(c);
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> finished{plan.chunks - todo.size()};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      try {
        const std::size_t chunk = todo[i];
        results[chunk] = run_chunk(plan, chunk);
        if (writer) writer->append_chunk(chunk, results[chunk]);
        const std::size_t done = ++finished;
        if (options.progress) {
          std::lock_guard lock(progress_mutex);
          options.progress(n, done, plan.chunks);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = todo.size();
        return;
      }
    }
  };
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(todo.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  if (writer && !complete) writer->finish();

  std::vector<CensusRecord> all;
  for (auto& chunk : results) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(all));
  }
  std::sort(all.begin(), all.end(), [](const CensusRecord& a, const CensusRecord& b) {
    return a.canonical_set.bits() < b.canonical_set.bits();
  });
  if (!plan.ci) {
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<CensusRecord> unique;
    for (CensusRecord& r : all) {
      if (seen.insert(r.certificate).second) unique.push_back(std::move(r));
    }
    all = std::move(unique);
  }
  return all;
}

CensusSummary run_census(int min_n, int max_n, const CensusOptions& options) {
  if (min_n < 1 || max_n < min_n) {
    throw DomainError("bad census range " + std::to_string(min_n) + ".." + std::to_string(max_n));
  }
  require_modulus(max_n);
  if (max_n > kStandardCensusMax && !options.extended) {
    throw DomainError("orders above " + std::to_string(kStandardCensusMax) +
                      " need the extended profile");
  }
  CensusOptions opts = options;
  if (max_n > kStandardCensusMax && opts.cache_dir.empty()) opts.cache_dir = kDefaultExtendedCache;

  CensusSummary summary;
  summary.min_n = min_n;
  summary.max_n = max_n;
  for (int n = min_n; n <= max_n; ++n) {
    std::vector<CensusRecord> recs = enumerate_order(n, opts);
    summary.orders.push_back(summarize(n, recs));
    std::move(recs.begin(), recs.end(), std::back_inserter(summary.records));
  }
  return summary;
}

int CensusSummary::total() const {
  int t = 0;
  for (const OrderSummary& o : orders) t += o.nontrivially_unstable;
  return t;
}

int CensusSummary::total_between(int lo, int hi) const {
  int t = 0;
  for (const OrderSummary& o : orders) {
    if (o.n >= lo && o.n <= hi) t += o.nontrivially_unstable;
  }
  return t;
}

const OrderSummary* CensusSummary::order(int n) const {
  for (const OrderSummary& o : orders) {
    if (o.n == n) return &o;
  }
  return nullptr;
}

// ---- export ------------------------------------------------------------------------

std::string summary_to_csv(const CensusSummary& summary) {
  std::ostringstream out;
  out << "order,nontrivially_unstable,c1,c2,c3,c4,general_hk,iso_translate,xe,no_wilson_type\n";
  for (const OrderSummary& o : summary.orders) {
    out << o.n << ',' << o.nontrivially_unstable << ',' << o.c1 << ',' << o.c2 << ',' << o.c3 << ','
        << o.c4 << ',' << o.general_hk << ',' << o.iso_translate << ',' << o.xe << ','
        << o.no_wilson_type << '\n';
  }
  return out.str();
}

std::string summary_to_json(const CensusSummary& summary) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["minN"] = summary.min_n;
  j["maxN"] = summary.max_n;
  j["totalNontriviallyUnstable"] = summary.total();
  ordered_json orders = ordered_json::array();
  for (const OrderSummary& o : summary.orders) {
    ordered_json e;
    e["order"] = o.n;
    e["nontriviallyUnstable"] = o.nontrivially_unstable;
    e["c1"] = o.c1;
    e["c2"] = o.c2;
    e["c3"] = o.c3;
    e["c4"] = o.c4;
    e["generalHk"] = o.general_hk;
    e["isoTranslate"] = o.iso_translate;
    e["xe"] = o.xe;
    e["noWilsonType"] = o.no_wilson_type;
    e["unexplained"] = o.unexplained;
    e["auxLoops"] = o.aux_loops;
    ordered_json nw = ordered_json::array();
    for (const ConnectionSet& s : o.no_wilson_sets) nw.push_back(format_set(s));
    e["noWilsonTypeSets"] = std::move(nw);
    ordered_json ux = ordered_json::array();
    for (const ConnectionSet& s : o.unexplained_sets) ux.push_back(format_set(s));
    e["unexplainedSets"] = std::move(ux);
    orders.push_back(std::move(e));
  }
  j["orders"] = std::move(orders);
  return j.dump(2) + "\n";
}

// ---- reference values ----------------------------------------------------------------

std::vector<ConnectionSet> known_order24_exceptions() {
  const std::vector<std::vector<int>> half_sets{
      {2, 3, 8, 9, 10},
      {2, 3, 8, 9, 10, 12},
      {1, 2, 5, 7, 8, 10, 11},
      {1, 2, 5, 7, 8, 10, 11, 12},
      {1, 2, 3, 5, 7, 8, 9, 10, 11},
      {1, 2, 3, 5, 7, 8, 9, 10, 11, 12},
  };
  std::vector<ConnectionSet> out;
  for (const auto& hs : half_sets) {
    ResidueSet r(24);
    for (int s : hs) {
      r.insert(s);
      r.insert((24 - s) % 24);
    }
    out.emplace_back(r);
  }
  return out;
}

bool PaperComparison::required_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const ComparisonRow& r) {
    return r.reference_only || !r.reference || r.matches;
  });
}

std::string PaperComparison::to_text() const {
  std::size_t width = 4;
  for (const ComparisonRow& r : rows) width = std::max(width, r.item.size());
  std::ostringstream out;
  for (const ComparisonRow& r : rows) {
    out << r.item << std::string(width - r.item.size() + 2, ' ') << "ours=" << r.ours;
    if (r.reference) {
      out << " reference=" << *r.reference << ' '
          << (r.matches ? "match" : (r.reference_only ? "differs (reference only)" : "MISMATCH"));
    } else {
      out << " no reference";
    }
    if (!r.note.empty()) out << "  [" << r.note << ']';
    out << '\n';
  }
  return out.str();
}

PaperComparison compare_to_paper(const CensusSummary& summary) {
  PaperComparison cmp;
  auto covers = [&](int lo, int hi) { return summary.min_n <= lo && summary.max_n >= hi; };
  auto count_row = [](std::string item, int ours, std::optional<int> ref, bool reference_only,
                      std::string note) {
    ComparisonRow row;
    row.item = std::move(item);
    row.ours = std::to_string(ours);
    if (ref) {
      row.reference = std::to_string(*ref);
      row.matches = ours == *ref;
    }
    row.reference_only = reference_only;
    row.note = std::move(note);
    return row;
  };

  for (const OrderSummary& o : summary.orders) {
    cmp.rows.push_back(count_row("order " + std::to_string(o.n) + " nontrivially unstable",
                                 o.nontrivially_unstable, std::nullopt, false, ""));
  }
  if (covers(1, kStandardCensusMax)) {
    cmp.rows.push_back(count_row("total orders 1-38", summary.total_between(1, kStandardCensusMax),
                                 3576, false, "Wilson reported 3274, a known discrepancy"));
  }
  if (covers(39, 50)) {
    cmp.rows.push_back(count_row("total orders 39-50", summary.total_between(39, 50), 67725, true,
                                 "computed once by the authors"));
  }

  static const std::map<int, int> extended_no_wilson{{40, 52}, {48, 262}, {50, 2}};
  for (const OrderSummary& o : summary.orders) {
    const std::string item = "order " + std::to_string(o.n) + " no Wilson type";
    if (o.n < 40) {
      cmp.rows.push_back(count_row(item, o.no_wilson_type, o.n == 24 ? 6 : 0, false, ""));
    } else {
      const auto it = extended_no_wilson.find(o.n);
      cmp.rows.push_back(count_row(item, o.no_wilson_type, it == extended_no_wilson.end() ? 0 : it->second,
                                   true, "computed once by the authors"));
    }
  }

  if (summary.order(24) != nullptr) {
    std::vector<std::vector<std::uint8_t>> ours;
    for (const CensusRecord& r : summary.records) {
      if (r.n == 24 && r.no_wilson_type()) ours.push_back(r.certificate);
    }
    std::vector<std::vector<std::uint8_t>> published;
    for (const ConnectionSet& s : known_order24_exceptions()) {
      published.push_back(canonical_certificate(CirculantGraph{s}.to_colored()));
    }
    std::sort(ours.begin(), ours.end());
    std::sort(published.begin(), published.end());
    int matched = 0;
    for (const auto& c : published) matched += std::binary_search(ours.begin(), ours.end(), c);
    ComparisonRow row;
    row.item = "order 24 exceptions up to isomorphism";
    row.ours = std::to_string(matched) + " of " + std::to_string(ours.size()) + " matched";
    row.reference = std::to_string(published.size()) + " published sets";
    row.matches = ours == published;
    cmp.rows.push_back(std::move(row));
  }

  int unexplained_low = 0;
  int unexplained_high = 0;
  for (const OrderSummary& o : summary.orders) (o.n <= 24 ? unexplained_low : unexplained_high) += o.unexplained;
  if (summary.min_n <= 24) {
    cmp.rows.push_back(count_row("unexplained, orders up to 24", unexplained_low, 0, false,
                                 "every example is explained by the instability conditions"));
  }
  if (summary.max_n > 24) {
    cmp.rows.push_back(count_row("unexplained, orders above 24", unexplained_high, 0, true,
                                 "reported, not asserted"));
  }
  return cmp;
}

}  // namespace circstab
