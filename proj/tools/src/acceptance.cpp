#include "circstab_cli/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>

#include "circstab/census.hpp"
#include "circstab/fixtures.hpp"
#include "circstab/twoprime.hpp"

namespace circstab::cli {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
void for_each_symmetric_set(int n, F&& f) {
  std::vector<std::uint64_t> pairs;
  for (int s = 1; 2 * s <= n; ++s) {
    pairs.push_back(2 * s == n ? std::uint64_t{1} << s : (std::uint64_t{1} << s) | (std::uint64_t{1} << (n - s)));
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if ((mask >> j) & 1) bits |= pairs[j];
    }
    f(ConnectionSet(ResidueSet(n, bits)));
  }
}

ColoredGraph random_colored_graph(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = 0.15 + 0.7 * unit(rng);
  const int colors = 1 + static_cast<int>(rng() % 3);
  ColoredGraph g(n);
  for (int v = 0; v < n; ++v) g.set_color(v, static_cast<int>(rng() % colors));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

std::vector<std::uint8_t> certificate_of(const ConnectionSet& s) {
  return canonical_certificate(CirculantGraph{s}.to_colored());
}

std::string counted(long long violations, const std::string& what) {
  return std::to_string(violations) + " " + what;
}

// ---- the criteria --------------------------------------------------------------------

struct Outcome {
  bool ok = false;
  std::string measured;
  std::string expected;
};

Outcome census_total(unsigned workers) {
  const CensusSummary s = run_census(1, kStandardCensusMax, {.workers = workers});
  return {s.total() == 3576, "total=" + std::to_string(s.total()), "total=3576"};
}

Outcome order24(unsigned workers) {
  const auto recs = enumerate_order(24, {.workers = workers});
  std::set<std::vector<std::uint8_t>> ours;
  for (const CensusRecord& r : recs) {
    if (r.no_wilson_type()) ours.insert(r.certificate);
  }
  std::set<std::vector<std::uint8_t>> published;
  for (const ConnectionSet& s : known_order24_exceptions()) published.insert(certificate_of(s));
  int matched = 0;
  for (const auto& c : published) matched += static_cast<int>(ours.count(c));
  return {ours == published,
          "no-wilson-type=" + std::to_string(ours.size()) + " matched=" + std::to_string(matched),
          "no-wilson-type=6 matched=6"};
}

Outcome extended_counts(const AcceptanceOptions& options) {
  CensusOptions co;
  co.workers = options.workers;
  co.extended = true;
  co.cache_dir = options.cache_dir;
  std::string measured;
  bool ok = true;
  for (auto [n, want] : {std::pair{40, 52}, std::pair{48, 262}, std::pair{50, 2}}) {
    const CensusSummary s = run_census(n, n, co);
    const int got = s.order(n)->no_wilson_type;
    ok = ok && got == want;
    measured += (measured.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(got);
  }
  return {ok, measured, "40:52 48:262 50:2"};
}

Outcome odd_orders() {
  long long bad = 0;
  long long sets = 0;
  for (int n = 1; n <= 15; n += 2) {
    for_each_symmetric_set(n, [&](const ConnectionSet& s) {
      ++sets;
      bad += stability_verdict(CirculantGraph{s}, {.annotate = false}).verdict == Verdict::nontrivially_unstable;
    });
  }
  return {bad == 0, counted(bad, "nontrivially unstable among " + std::to_string(sets) + " sets"),
          "0 nontrivially unstable"};
}

Outcome orders_pattern(unsigned workers) {
  std::string disagreements;
  for (int n = 1; n <= 22; ++n) {
    const bool empty = enumerate_order(n, {.workers = workers}).empty();
    if (orders_predicate(n) != empty) disagreements += " " + std::to_string(n);
  }
  return {disagreements.empty(), disagreements.empty() ? "agree for n<=22" : "disagree at" + disagreements,
          "agree for n<=22"};
}

Outcome two_prime() {
  std::string measured;
  bool ok = true;
  for (int n : {10, 22, 26}) {
    std::set<std::vector<std::uint8_t>> unstable;
    std::set<std::vector<std::uint8_t>> classified;
    long long missing_c4 = 0;
    for_each_symmetric_set(n, [&](const ConnectionSet& s) {
      const CirculantGraph x{s};
      if (stability_verdict(x, {.annotate = false}).verdict == Verdict::nontrivially_unstable) {
        unstable.insert(certificate_of(s));
        missing_c4 += !check_c4(s).has_value();
      }
      if (classify_2p(s).status == TwoPrimeStatus::classified) classified.insert(certificate_of(s));
    });
    ok = ok && unstable == classified && missing_c4 == 0;
    measured += (measured.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(unstable.size()) + "/" +
                std::to_string(classified.size()) + "/c4-missing=" + std::to_string(missing_c4);
  }
  return {ok, measured, "unstable classes = classified classes, c4-missing=0"};
}

Outcome oracle_equivalence() {
  long long bad = 0;
  long long graphs = 0;
  auto check = [&](const ColoredGraph& g) {
    ++graphs;
    bad += analyze(g, {.canonical = false}).group_order != brute_force_aut_order(g);
  };
  for (int n = 1; n <= 12; ++n) {
    for_each_symmetric_set(n, [&](const ConnectionSet& s) {
      const CirculantGraph x{s};
      check(x.to_colored());
      if (2 * n <= 12) check(double_cover(x));
    });
  }
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) check(random_colored_graph(rng, 10));
  return {bad == 0, counted(bad, "mismatches in " + std::to_string(graphs) + " graphs"), "0 mismatches"};
}

Outcome fixtures() {
  struct Case {
    std::string name;
    ConnectionSet set;
  };
  std::string measured;
  bool ok = true;
  for (const Case& c : {Case{"val8Eg", val8_example(4)}, Case{"IsoTranslateSEg", iso_translate_example(5, 2, 10)}}) {
    const auto t0 = Clock::now();
    const CirculantGraph x{c.set};
    const StabilityReport r = stability_verdict(x);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool good = is_connected(x) && !is_bipartite(x) && is_twin_free(x) && r.aut_bx > 2 * r.aut_x &&
                      r.verdict == Verdict::nontrivially_unstable && r.conditions.iso_translate.has_value() &&
                      !r.wilson.any() && secs < 60.0;
    ok = ok && good;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    measured += (measured.empty() ? "" : " ") + c.name + "(n=" + std::to_string(c.set.order()) + "):" +
                (good ? "ok" : "bad") + "/" + buf;
  }
  return {ok, measured, "both ok"};
}

struct SweepCounts {
  long long sets = 0;
  long long unsound_hits = 0;
  long long bad_witnesses = 0;
  long long not_special_case = 0;
  long long not_c1 = 0;
};

SweepCounts even_sweep() {
  SweepCounts c;
  for (int n = 2; n <= 24; n += 2) {
    for_each_symmetric_set(n, [&](const ConnectionSet& s) {
      ++c.sets;
      const CirculantGraph x{s};
      const StabilityReport r = stability_verdict(x);
      if (r.any_condition() && r.verdict == Verdict::stable) ++c.unsound_hits;
      for (const Witness& w : r.witnesses) c.bad_witnesses += !verify_perm_pair(x, w.pair);
      const auto& hk = r.conditions.general_hk;
      if ((r.wilson.c1 || r.wilson.c2 || r.wilson.c3) && !(hk && hk->variant == 2)) ++c.not_special_case;
      if (n % 4 == 2 && hk && hk->variant == 2 && !r.wilson.c1) ++c.not_c1;
    });
  }
  return c;
}

Outcome soundness(const SweepCounts& c) {
  return {c.unsound_hits == 0 && c.bad_witnesses == 0,
          counted(c.unsound_hits, "hits on stable graphs, ") + counted(c.bad_witnesses, "bad witnesses in ") +
              std::to_string(c.sets) + " sets",
          "0 violations"};
}

Outcome cross_implications(const SweepCounts& c) {
  return {c.not_special_case == 0 && c.not_c1 == 0,
          "WilsonIsSpecialCase violations=" + std::to_string(c.not_special_case) +
              " NotDivBy4=C1 violations=" + std::to_string(c.not_c1),
          "0 violations"};
}

Outcome invariants() {
  long long ms_bad = 0;
  long long aux_bad = 0;
  for (int n = 1; n <= 16; ++n) {
    for_each_symmetric_set(n, [&](const ConnectionSet& s) {
      const CirculantGraph x{s};
      const auto gx = analyze(x.to_colored(), {.canonical = false}).generators;
      units(n).for_each([&](int m) {
        const ColoredGraph xm = CirculantGraph{ConnectionSet(scale_set(s.members(), m))}.to_colored();
        for (const Permutation& g : gx) ms_bad += !xm.is_automorphism(g);
      });
      const auto gbx = analyze(double_cover(x), {.canonical = false}).generators;
      for (int m = 3; m < 2 * n; m += 2) {
        if (std::gcd(m, 2 * n) != 1) continue;
        const ColoredGraph bm = double_cover(CirculantGraph{ConnectionSet(scale_set(s.members(), m % n))});
        for (const Permutation& g : gbx) ms_bad += !bm.is_automorphism(g);
      }
      if (n % 2 == 0) {
        const Aux2SPrime aux = aux_2sprime_graph(x);
        for (const Permutation& g : gbx) aux_bad += !aux.graph.is_automorphism(g);
      }
    });
  }
  std::mt19937_64 rng(11);
  const std::vector<ColoredGraph> graphs{
      double_cover(circulant(8, {1, 2, 6, 7})),
      circulant(10, {1, 2, 8, 9}).to_colored(),
      double_cover(circulant(12, {1, 4, 8, 11}), CoverLayout::layered),
      CirculantGraph{val8_example(4)}.to_colored(),
      random_colored_graph(rng, 14),
  };
  long long cert_bad = 0;
  for (const ColoredGraph& g : graphs) {
    const auto cert = canonical_certificate(g);
    for (int i = 0; i < 1000; ++i) {
      cert_bad += canonical_certificate(g.relabeled(random_permutation(rng, g.vertex_count()))) != cert;
    }
  }
  return {ms_bad == 0 && aux_bad == 0 && cert_bad == 0,
          "mS violations=" + std::to_string(ms_bad) + " 2S'-BX violations=" + std::to_string(aux_bad) +
              " certificate changes=" + std::to_string(cert_bad) + "/" + std::to_string(1000 * graphs.size()),
          "0 violations"};
}

Outcome stability_sanity() {
  std::string unstable_kn;
  for (int n = 3; n <= 10; ++n) {
    std::vector<int> all(n - 1);
    std::iota(all.begin(), all.end(), 1);
    if (stability_verdict(circulant(n, all), {.annotate = false}).verdict != Verdict::stable) {
      unstable_kn += " K" + std::to_string(n);
    }
  }
  long long bad = 0;
  for (int n = 2; n <= 16; ++n) {
    for_each_symmetric_set(n, [&](const ConnectionSet& s) {
      const CirculantGraph x{s};
      if (is_connected(x) && !is_bipartite(x) && is_twin_free(x)) return;
      bad += stability_verdict(x, {.annotate = false}).verdict != Verdict::trivially_unstable;
    });
  }
  return {unstable_kn.empty() && bad == 0,
          (unstable_kn.empty() ? std::string("K3..K10 stable") : "unstable:" + unstable_kn) + ", " +
              counted(bad, "trivial inputs not trivially unstable"),
          "K3..K10 stable, 0 trivial inputs misreported"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  auto record = [&](int id, std::string title, bool required, auto&& body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.required = required;
    const auto t0 = Clock::now();
    try {
      const Outcome o = body();
      r.measured = o.measured;
      r.expected = o.expected;
      if (required) {
        r.status = o.ok ? CriterionStatus::pass : CriterionStatus::fail;
      } else {
        r.status = o.ok ? CriterionStatus::reference_match : CriterionStatus::reference_differs;
      }
    } catch (const std::exception& e) {
      r.measured = std::string("exception: ") + e.what();
      r.status = required ? CriterionStatus::fail : CriterionStatus::reference_differs;
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  };

  const unsigned w = std::max(1u, options.workers);
  record(1, "census total, orders 1..38", true, [&] { return census_total(w); });
  record(2, "order-24 exceptions", true, [&] { return order24(w); });
  if (options.extended) {
    record(3, "extended no-Wilson-type counts", false, [&] { return extended_counts(options); });
  } else {
    CriterionResult r{3, "extended no-Wilson-type counts", false, CriterionStatus::not_run, "not requested",
                      "40:52 48:262 50:2", 0.0};
    if (options.on_result) options.on_result(r);
    results.push_back(r);
  }
  record(4, "odd orders <= 15", true, odd_orders);
  record(5, "orders pattern, n <= 22", true, [&] { return orders_pattern(w); });
  record(6, "order-2p classification, n in {10,22,26}", true, two_prime);
  record(7, "oracle equivalence", true, oracle_equivalence);
  record(8, "published fixtures", true, fixtures);
  SweepCounts sweep;
  bool swept = false;
  auto ensure_sweep = [&] {
    if (!swept) sweep = even_sweep();
    swept = true;
  };
  record(9, "soundness sweep, even n <= 24", true, [&] {
    ensure_sweep();
    return soundness(sweep);
  });
  record(10, "cross-implications, even n <= 24", true, [&] {
    ensure_sweep();
    return cross_implications(sweep);
  });
  record(11, "invariant suites", true, invariants);
  record(12, "stability sanity", true, stability_sanity);
  return results;
}

std::string format_result(const CriterionResult& r) {
  const char* tag = "";
  switch (r.status) {
    case CriterionStatus::pass: tag = "PASS"; break;
    case CriterionStatus::fail: tag = "FAIL"; break;
    case CriterionStatus::not_run: tag = "NOT RUN"; break;
    case CriterionStatus::reference_match: tag = "REF MATCH"; break;
    case CriterionStatus::reference_differs: tag = "REF DIFFERS"; break;
  }
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1f s", r.seconds);
  return std::string("[") + tag + "] " + std::to_string(r.id) + " " + r.title + ": measured " + r.measured +
         "; expected " + r.expected + " (" + secs + ")";
}

bool all_required_pass(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) {
    return !r.required || r.status == CriterionStatus::pass;
  });
}

}  // namespace circstab::cli
