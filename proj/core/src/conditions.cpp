#include "circstab/conditions.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace circstab {

namespace {

Permutation perm_from(int n, const std::function<int(int)>& f) {
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = mod(f(x), n);
  return Permutation(std::move(img));
}

Permutation affine(int n, int m, int t) {
  return perm_from(n, [&](int x) { return static_cast<long long>(m) * x % n + t; });
}

// x -> m x + t on 2Z_n, identity on odd residues.
Permutation affine_on_evens(int n, int m, int t) {
  return perm_from(n, [&](int x) { return x % 2 == 0 ? static_cast<long long>(m) * x % n + t : x; });
}

PermPair checked(const CirculantGraph& x, PermPair p, const char* source) {
  if (!verify_perm_pair(x, p)) {
    throw std::logic_error(std::string(source) + " witness failed verification on " +
                           x.connection.to_literal());
  }
  return p;
}

void require_even(int n, const char* what) {
  if (n % 2 != 0) throw DomainError(std::string(what) + " requires even n");
}

void require_div4(int n, const char* what) {
  if (n % 4 != 0) throw DomainError(std::string(what) + " requires n divisible by 4");
}

Permutation rotation(int n, int layers) {
  std::vector<int> img(layers * n);
  for (int i = 0; i < layers; ++i) {
    for (int v = 0; v < n; ++v) img[cover_vertex(v, i, n)] = cover_vertex((v + 1) % n, i, n);
  }
  return Permutation(std::move(img));
}

Permutation layer_swap(int n) {
  std::vector<int> img(2 * n);
  for (int v = 0; v < n; ++v) {
    img[cover_vertex(v, 0, n)] = cover_vertex(v, 1, n);
    img[cover_vertex(v, 1, n)] = cover_vertex(v, 0, n);
  }
  return Permutation(std::move(img));
}

Permutation diagonal_lift(const Permutation& g) {
  const int n = g.degree();
  std::vector<int> img(2 * n);
  for (int i = 0; i < 2; ++i) {
    for (int v = 0; v < n; ++v) img[cover_vertex(v, i, n)] = cover_vertex(g(v), i, n);
  }
  return Permutation(std::move(img));
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::stable:
      return "stable";
    case Verdict::trivially_unstable:
      return "trivially-unstable";
    case Verdict::nontrivially_unstable:
      return "nontrivially-unstable";
  }
  return "unknown";
}

std::string to_string(TrivialityReason r) {
  switch (r) {
    case TrivialityReason::disconnected:
      return "disconnected";
    case TrivialityReason::bipartite:
      return "bipartite";
    case TrivialityReason::has_twins:
      return "has-twins";
  }
  return "unknown";
}

std::string to_string(IsoMethod m) {
  return m == IsoMethod::multiplier ? "multiplier" : "canonical-form";
}

std::string to_string(XeFamily f) { return f == XeFamily::multiplier ? "multiplier" : "even-cover"; }

bool verify_perm_pair(const CirculantGraph& x, const PermPair& p) {
  const int n = x.order();
  if (p.alpha.degree() != n || p.beta.degree() != n) {
    throw DomainError("permutation pair has degree " + std::to_string(p.alpha.degree()) + "/" +
                      std::to_string(p.beta.degree()) + ", expected " + std::to_string(n));
  }
  if (p.alpha == p.beta) return false;
  const ResidueSet& s = x.connection.members();
  for (int u = 0; u < n; ++u) {
    bool ok = true;
    s.for_each([&](int t) { ok = ok && x.adjacent(p.alpha(u), p.beta((u + t) % n)); });
    if (!ok) return false;
  }
  return true;
}

std::optional<PermPair> extract_perm_pair(const CirculantGraph& x, const Permutation& g) {
  const int n = x.order();
  if (!is_connected(x) || is_bipartite(x)) {
    throw DomainError("extract_perm_pair requires a connected double cover");
  }
  const ColoredGraph bx = double_cover(x);
  if (g.degree() != 2 * n || !bx.is_automorphism(g)) {
    throw DomainError("extract_perm_pair: not an automorphism of BX");
  }
  // BX is connected, so its two layers form a block system.
  const Permutation fixed = g(0) >= n ? layer_swap(n).after(g) : g;
  std::vector<int> a(n), b(n);
  for (int v = 0; v < n; ++v) {
    a[v] = fixed(cover_vertex(v, 0, n));
    b[v] = fixed(cover_vertex(v, 1, n)) - n;
  }
  PermPair p{Permutation(std::move(a)), Permutation(std::move(b))};
  if (p.alpha == p.beta) return std::nullopt;
  return checked(x, std::move(p), "aut-bx");
}

std::optional<int> check_c1(const ConnectionSet& s) {
  const int n = s.order();
  require_even(n, "check_c1");
  const ResidueSet se = s.even_part();
  for (int h = 2; h < n; h += 2) {
    if (translate_set(se, h) == se) return h;
  }
  return std::nullopt;
}

std::optional<int> check_c2(const ConnectionSet& s) {
  const int n = s.order();
  require_div4(n, "check_c2");
  const ResidueSet so = s.odd_part();
  const ResidueSet& all = s.members();
  for (int h = 1; h < n; h += 2) {
    if (translate_set(so, 2 * h) != so) continue;
    const int minus_h = mod(-h, 4);
    bool ok = true;
    all.for_each([&](int t) {
      if (t % 4 == 0 || t % 4 == minus_h) ok = ok && all.contains((t + h) % n);
    });
    if (ok) return h;
  }
  return std::nullopt;
}

std::optional<C3Hit> check_c3(const ConnectionSet& s) {
  const int n = s.order();
  const ResidueSet& all = s.members();
  for (const Subgroup& h : subgroups(n)) {
    ResidueSet r(n);
    all.for_each([&](int t) {
      if (!translate_set(h.members(), t).is_subset_of(all)) r.insert(t);
    });
    if (r.empty()) continue;
    int d = n;
    r.for_each([&](int t) { d = std::gcd(d, t); });
    if ((n / d) % 2 != 0) continue;
    bool odd_quotients = true;
    r.for_each([&](int t) { odd_quotients = odd_quotients && (t / d) % 2 == 1; });
    if (!odd_quotients) continue;
    const bool outside_d = h.generator() % d != 0;
    const bool inside_2d = h.generator() % (2 * d) == 0;
    if (outside_d || inside_2d) return C3Hit{h, r, d};
  }
  return std::nullopt;
}

std::optional<int> check_c4(const ConnectionSet& s) {
  const int n = s.order();
  require_even(n, "check_c4");
  std::optional<int> found;
  units(n).for_each([&](int m) {
    if (!found && translate_set(scale_set(s.members(), m), n / 2) == s.members()) found = m;
  });
  return found;
}

ResidueSet odd_part_of_subgroup(const Subgroup& k) {
  if (k.order() % 2 != 0) throw DomainError("K_o requires |K| even");
  return k.members() - Subgroup(k.modulus(), 2 * k.generator()).members();
}

bool general_hk_accepts(const ConnectionSet& s, int variant, const Subgroup& h, const Subgroup& k) {
  const int n = s.order();
  if (h.modulus() != n || k.modulus() != n) throw DomainError("subgroup modulus mismatch");
  if (h.is_trivial() || k.is_trivial() || k.order() % 2 != 0) return false;
  const ResidueSet& all = s.members();
  const ResidueSet ko = odd_part_of_subgroup(k);
  if (variant == 1) {
    if (!(h.members() & ko).empty()) return false;
    return add_subgroup(all, h).is_subset_of(all | add_subgroup(ko, h));
  }
  if (variant == 2) {
    if (h.order() == 2 && k.order() % 4 != 0) return false;
    return add_subgroup(all - ko, h).is_subset_of(all | ko);
  }
  throw DomainError("variant must be 1 or 2");
}

std::optional<GeneralHkHit> check_general_hk(const ConnectionSet& s) {
  const int n = s.order();
  if (n % 2 != 0) return std::nullopt;
  const std::vector<Subgroup> all = subgroups(n);
  for (int variant : {2, 1}) {
    for (const Subgroup& h : all) {
      for (const Subgroup& k : all) {
        if (general_hk_accepts(s, variant, h, k)) return GeneralHkHit{variant, h, k};
      }
    }
  }
  return std::nullopt;
}

PermPair witness_general_hk(const ConnectionSet& s, const GeneralHkHit& hit) {
  if (!general_hk_accepts(s, hit.variant, hit.h, hit.k)) {
    throw DomainError("witness_general_hk: (H, K) not accepted for " + s.to_literal());
  }
  const int n = s.order();
  const int h = hit.h.generator();
  const Subgroup two_k(n, 2 * hit.k.generator());
  const ResidueSet ko = odd_part_of_subgroup(hit.k);
  const CirculantGraph x{s};

  if (hit.variant == 1 || two_k.contains(h)) {
    // With h in 2K we have K_o + H = K_o, and the first construction applies.
    const ResidueSet a_moved = add_subgroup(two_k.members(), hit.h);
    const ResidueSet b_moved = add_subgroup(ko, hit.h);
    PermPair p{perm_from(n, [&](int v) { return a_moved.contains(v) ? v + h : v; }),
               perm_from(n, [&](int v) { return b_moved.contains(v) ? v + h : v; })};
    return checked(x, std::move(p), "general-hk");
  }
  const ResidueSet even = two_k.members();
  const ResidueSet even_h = translate_set(even, h);
  const ResidueSet ko_h = translate_set(ko, h);
  PermPair p{perm_from(n,
                       [&](int v) {
                         if (even.contains(v)) return v + h;
                         if (even_h.contains(v)) return v - h;
                         return v;
                       }),
             perm_from(n, [&](int v) {
               if (ko.contains(v)) return v + h;
               if (ko_h.contains(v)) return v - h;
               return v;
             })};
  return checked(x, std::move(p), "general-hk");
}

std::optional<IsoWitness> check_iso_translate(const ConnectionSet& s, const IsoTranslateOptions& options) {
  const int n = s.order();
  require_even(n, "check_iso_translate");
  const int half = n / 2;
  if (s.contains(half)) return std::nullopt;
  const ResidueSet target = translate_set(s.members(), half);
  const CirculantGraph x{s};

  std::optional<IsoWitness> found;
  units(n).for_each([&](int m) {
    if (found || scale_set(s.members(), m) != target) return;
    IsoWitness w;
    w.method = IsoMethod::multiplier;
    w.multiplier = m;
    w.isomorphism = affine(n, m, 0);
    w.pair = checked(x, PermPair{w.isomorphism, affine(n, m, half)}, "iso-translate");
    found = std::move(w);
  });
  if (found || (has_ci_guarantee(n) && !options.force_canonical)) return found;

  const ConnectionSet translated(target);
  if (!spectra_match(circulant_spectrum(s), circulant_spectrum(translated))) return std::nullopt;
  const auto iso = is_isomorphic(x.to_colored(), CirculantGraph{translated}.to_colored());
  if (!iso) return std::nullopt;
  IsoWitness w;
  w.method = IsoMethod::canonical_form;
  w.isomorphism = *iso;
  w.pair = checked(x, PermPair{*iso, perm_from(n, [&](int v) { return (*iso)(v) + half; })},
                   "iso-translate");
  return w;
}

bool verify_xe_general(const CirculantGraph& x, const Permutation& alpha, const Permutation& beta,
                       const Subgroup& h, PermPair* extended) {
  const int n = x.order();
  require_even(n, "verify_xe_general");
  if (h.modulus() != n || h.generator() % 2 != 0) {
    throw DomainError("verify_xe_general: H must be a subgroup of 2Z_n");
  }
  if (alpha.degree() != n || beta.degree() != n) throw DomainError("verify_xe_general: degree mismatch");
  for (int v = 1; v < n; v += 2) {
    if (alpha(v) != v || beta(v) != v) {
      throw DomainError("verify_xe_general: permutations must act on 2Z_n only");
    }
  }
  // (1)
  if (alpha == beta) return false;
  // (2) on the even layer
  const ResidueSet se = x.connection.even_part();
  for (int u = 0; u < n; u += 2) {
    bool ok = true;
    se.for_each([&](int t) { ok = ok && x.adjacent(alpha(u), beta((u + t) % n)); });
    if (!ok) return false;
  }
  // (3)
  if (!add_subgroup(x.connection.odd_part(), h).is_subset_of(x.connection.members())) return false;
  // (4)
  for (int v = 0; v < n; v += 2) {
    if (!h.contains(alpha(v) - v) || !h.contains(beta(v) - v)) return false;
  }
  PermPair p = checked(x, PermPair{alpha, beta}, "xe-general");
  if (extended != nullptr) *extended = std::move(p);
  return true;
}

std::optional<int> check_xe_c4(const ConnectionSet& s) {
  const int n = s.order();
  require_div4(n, "check_xe_c4");
  const ResidueSet se = s.even_part();
  const ResidueSet so = s.odd_part();
  if (translate_set(so, n / 2) != so) return std::nullopt;
  std::optional<int> found;
  units(n).for_each([&](int m) {
    if (found) return;
    if (translate_set(scale_set(se, m), n / 2) != se) return;
    if (add_subgroup(so, subgroup_generated_by(2 * (m - 1), n)) != so) return;
    found = m;
  });
  return found;
}

std::optional<XeWitness> search_xe_general(const CirculantGraph& x) {
  const int n = x.order();
  if (n % 2 != 0) return std::nullopt;
  const ResidueSet se = x.connection.even_part();
  const ResidueSet so = x.connection.odd_part();
  const int stab = translation_stabilizer(so).generator();
  const Subgroup hmax(n, std::lcm(stab, 2));
  if (hmax.is_trivial()) return std::nullopt;

  std::vector<Subgroup> candidates;
  for (const Subgroup& h : subgroups(n)) {
    if (h.is_subgroup_of(hmax)) candidates.push_back(h);
  }
  auto attempt = [&](const Permutation& alpha, const Permutation& beta,
                     XeFamily family) -> std::optional<XeWitness> {
    for (const Subgroup& h : candidates) {
      PermPair p;
      if (verify_xe_general(x, alpha, beta, h, &p)) return XeWitness{family, h, std::move(p)};
    }
    return std::nullopt;
  };

  for (int m : units(n).values()) {
    if (!hmax.contains(2 * (m - 1))) continue;
    const ResidueSet scaled = scale_set(se, m);
    for (int t = hmax.generator(); t < n; t += hmax.generator()) {
      if (translate_set(scaled, t) != se) continue;
      if (auto w = attempt(affine_on_evens(n, m, 0), affine_on_evens(n, m, t), XeFamily::multiplier)) {
        return w;
      }
    }
  }

  const int half = n / 2;
  const CirculantGraph xe = even_subgraph(x);
  const AutomorphismReport cover =
      analyze(double_cover(xe, CoverLayout::layered), {.canonical = false, .known_automorphisms = {}});
  for (const Permutation& g : cover.generators) {
    std::vector<int> a(n), b(n);
    bool diagonal = true;
    for (int v = 0; v < n; ++v) a[v] = b[v] = v;
    for (int k = 0; k < half; ++k) {
      const int ak = g(cover_vertex(k, 0, half));
      const int bk = g(cover_vertex(k, 1, half)) - half;
      diagonal = diagonal && ak == bk;
      a[2 * k] = 2 * ak;
      b[2 * k] = 2 * bk;
    }
    if (diagonal) continue;
    if (auto w = attempt(Permutation(a), Permutation(b), XeFamily::even_cover)) return w;
  }
  return std::nullopt;
}

AutomorphismReport circulant_automorphisms(const CirculantGraph& x) {
  const int n = x.order();
  AnalyzeOptions opts;
  opts.canonical = false;
  if (n > 2) {
    opts.known_automorphisms.push_back(affine(n, 1, 1));
    opts.known_automorphisms.push_back(affine(n, -1, 0));
  } else if (n == 2) {
    opts.known_automorphisms.push_back(affine(n, 1, 1));
  }
  return analyze(x.to_colored(), opts);
}

BigInt double_cover_order_plain(const CirculantGraph& x) {
  return analyze(double_cover(x), {.canonical = false, .known_automorphisms = {}}).group_order;
}

StabilityReport stability_verdict(const CirculantGraph& x, const VerdictOptions& options) {
  const int n = x.order();
  if (2 * n > kMaxVertices) {
    throw CapExceeded("double cover of order " + std::to_string(2 * n) + " exceeds the engine cap");
  }
  StabilityReport report;
  report.connection = x.connection;

  const bool connected = is_connected(x);
  const bool bipartite = n > 1 && is_bipartite(x);
  if (n > 1) {
    if (!connected) report.triviality_reasons.push_back(TrivialityReason::disconnected);
    if (bipartite) report.triviality_reasons.push_back(TrivialityReason::bipartite);
    if (!is_twin_free(x)) report.triviality_reasons.push_back(TrivialityReason::has_twins);
  }

  const AutomorphismReport aut_x = circulant_automorphisms(x);
  report.aut_x = aut_x.group_order;

  AnalyzeOptions cover_opts;
  cover_opts.canonical = false;
  if (n > 1) cover_opts.known_automorphisms.push_back(rotation(n, 2));
  for (const Permutation& g : aut_x.generators) cover_opts.known_automorphisms.push_back(diagonal_lift(g));

  std::vector<Permutation> layered_generators;
  if (connected && !bipartite && n > 1) {
    // BX is connected and bipartite, so every automorphism fixes or swaps the
    // layers, and the swap is one of them.
    const AutomorphismReport layered =
        analyze(double_cover(x, CoverLayout::layered), cover_opts);
    report.aut_bx = 2 * layered.group_order;
    layered_generators = layered.generators;
  } else {
    cover_opts.known_automorphisms.push_back(layer_swap(n));
    report.aut_bx = analyze(double_cover(x), cover_opts).group_order;
  }

  if (report.aut_bx == 2 * report.aut_x) {
    report.verdict = Verdict::stable;
  } else {
    report.verdict = report.triviality_reasons.empty() ? Verdict::nontrivially_unstable
                                                        : Verdict::trivially_unstable;
    for (const Permutation& g : layered_generators) {
      if (auto p = extract_perm_pair(x, g)) {
        report.witnesses.push_back({"aut-bx", std::move(*p)});
        break;
      }
    }
  }

  if (options.annotate && n % 2 == 0) annotate_conditions(x, report, options.iso);
  return report;
}

void annotate_conditions(const CirculantGraph& x, StabilityReport& report,
                         const IsoTranslateOptions& iso) {
  const ConnectionSet& s = x.connection;
  const int n = s.order();
  report.even_part_empty = s.even_part().empty();
  report.odd_part_empty = s.odd_part().empty();
  if (n % 2 != 0) return;
  report.annotated = true;
  report.aux_loops = s.contains(n / 2);
  const int half = n / 2;
  const Subgroup whole(n, 1);

  // C.1-C.3 are instances of the (H, K) condition; their witnesses come from it.
  if ((report.wilson.c1 = check_c1(s))) {
    const GeneralHkHit hk{2, subgroup_generated_by(*report.wilson.c1, n), whole};
    report.witnesses.push_back({"C1", witness_general_hk(s, hk)});
  }
  if (n % 4 == 0 && (report.wilson.c2 = check_c2(s))) {
    const GeneralHkHit hk{2, subgroup_generated_by(*report.wilson.c2, n), Subgroup(n, 2)};
    report.witnesses.push_back({"C2", witness_general_hk(s, hk)});
  }
  if ((report.wilson.c3 = check_c3(s))) {
    const GeneralHkHit hk{2, report.wilson.c3->h, Subgroup(n, report.wilson.c3->d)};
    report.witnesses.push_back({"C3", witness_general_hk(s, hk)});
  }
  if ((report.wilson.c4 = check_c4(s))) {
    const int m = *report.wilson.c4;
    report.witnesses.push_back({"C4", checked(x, PermPair{affine(n, m, 0), affine(n, m, half)}, "C4")});
  }
  if ((report.conditions.general_hk = check_general_hk(s))) {
    report.witnesses.push_back({"general-hk", witness_general_hk(s, *report.conditions.general_hk)});
  }
  if (auto w = check_iso_translate(s, iso)) {
    report.conditions.iso_translate = IsoTranslateHit{w->method, w->multiplier};
    report.witnesses.push_back({"iso-translate", std::move(w->pair)});
  }
  if (n % 4 == 0 && (report.conditions.xe_c4 = check_xe_c4(s))) {
    const int m = *report.conditions.xe_c4;
    const Subgroup h = subgroup_generated_by(std::gcd(2 * (m - 1), half), n);
    PermPair p;
    if (!verify_xe_general(x, affine_on_evens(n, m, 0), affine_on_evens(n, m, half), h, &p)) {
      throw std::logic_error("xe-c4 witness failed verification on " + s.to_literal());
    }
    report.witnesses.push_back({"xe-c4", std::move(p)});
  }
  if (auto w = search_xe_general(x)) {
    report.conditions.xe_general = XeGeneralHit{w->family, w->h};
    report.witnesses.push_back({"xe-general", std::move(w->pair)});
  }
  report.unexplained = report.verdict == Verdict::nontrivially_unstable && !report.any_condition();
}

}  // namespace circstab
