#include "circstab/report_json.hpp"

#include <nlohmann/json.hpp>

namespace circstab {

namespace {

using Json = nlohmann::ordered_json;

Json perm_json(const Permutation& p) { return Json(p.image()); }

std::vector<int> ints(const ResidueSet& s) { return s.values(); }

template <class E>
E enum_from(const std::string& text, std::initializer_list<E> values) {
  for (E v : values) {
    if (to_string(v) == text) return v;
  }
  throw ParseError("unknown value '" + text + "'");
}

Json to_json_impl(const StabilityReport& r) {
  const int n = r.connection.order();
  Json j;
  j["n"] = n;
  j["connectionSet"] = ints(r.connection.members());
  j["verdict"] = to_string(r.verdict);
  Json reasons = Json::array();
  for (TrivialityReason t : r.triviality_reasons) reasons.push_back(to_string(t));
  j["trivialityReasons"] = reasons;
  j["autX"] = r.aut_x.str();
  j["autBX"] = r.aut_bx.str();

  Json wilson = Json::array();
  if (r.wilson.c1) wilson.push_back({{"type", "C1"}, {"h", *r.wilson.c1}, {"vacuous", r.even_part_empty}});
  if (r.wilson.c2) wilson.push_back({{"type", "C2"}, {"h", *r.wilson.c2}, {"vacuous", r.odd_part_empty}});
  if (r.wilson.c3) {
    wilson.push_back({{"type", "C3"},
                      {"H", r.wilson.c3->h.generator()},
                      {"R", ints(r.wilson.c3->r)},
                      {"d", r.wilson.c3->d}});
  }
  if (r.wilson.c4) wilson.push_back({{"type", "C4"}, {"m", *r.wilson.c4}});
  j["wilsonTypes"] = wilson;

  Json conds = Json::array();
  if (const auto& hk = r.conditions.general_hk) {
    conds.push_back({{"type", "general-hk"},
                     {"variant", hk->variant},
                     {"H", hk->h.generator()},
                     {"K", hk->k.generator()}});
  }
  if (const auto& iso = r.conditions.iso_translate) {
    Json e{{"type", "iso-translate"}, {"method", to_string(iso->method)}};
    if (iso->method == IsoMethod::multiplier) e["m"] = iso->multiplier;
    conds.push_back(e);
  }
  if (r.conditions.xe_c4) conds.push_back({{"type", "xe-c4"}, {"m", *r.conditions.xe_c4}});
  if (const auto& xe = r.conditions.xe_general) {
    conds.push_back({{"type", "xe-general"}, {"family", to_string(xe->family)}, {"H", xe->h.generator()}});
  }
  j["newConditions"] = conds;

  Json wit = Json::array();
  for (const Witness& w : r.witnesses) {
    wit.push_back({{"source", w.source}, {"alpha", perm_json(w.pair.alpha)}, {"beta", perm_json(w.pair.beta)}});
  }
  j["witnesses"] = wit;
  j["unexplained"] = r.unexplained;
  j["flags"] = {{"annotated", r.annotated},
                {"evenPartEmpty", r.even_part_empty},
                {"oddPartEmpty", r.odd_part_empty},
                {"auxLoops", r.aux_loops}};
  return j;
}

Subgroup subgroup_at(int n, const Json& j) {
  try {
    return Subgroup(n, j.get<int>());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

StabilityReport from_json_impl(const Json& j) {
  StabilityReport r;
  const int n = j.at("n").get<int>();
  require_modulus(n);
  try {
    r.connection = ConnectionSet(n, j.at("connectionSet").get<std::vector<int>>());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  r.verdict = enum_from<Verdict>(j.at("verdict").get<std::string>(),
                                 {Verdict::stable, Verdict::trivially_unstable, Verdict::nontrivially_unstable});
  for (const Json& t : j.at("trivialityReasons")) {
    r.triviality_reasons.push_back(enum_from<TrivialityReason>(
        t.get<std::string>(),
        {TrivialityReason::disconnected, TrivialityReason::bipartite, TrivialityReason::has_twins}));
  }
  r.aut_x = BigInt(j.at("autX").get<std::string>());
  r.aut_bx = BigInt(j.at("autBX").get<std::string>());

  for (const Json& w : j.at("wilsonTypes")) {
    const std::string type = w.at("type").get<std::string>();
    if (type == "C1") {
      r.wilson.c1 = w.at("h").get<int>();
    } else if (type == "C2") {
      r.wilson.c2 = w.at("h").get<int>();
    } else if (type == "C3") {
      r.wilson.c3 = C3Hit{subgroup_at(n, w.at("H")),
                          ResidueSet::from_values(n, w.at("R").get<std::vector<int>>()),
                          w.at("d").get<int>()};
    } else if (type == "C4") {
      r.wilson.c4 = w.at("m").get<int>();
    } else {
      throw ParseError("unknown Wilson type '" + type + "'");
    }
  }
  for (const Json& c : j.at("newConditions")) {
    const std::string type = c.at("type").get<std::string>();
    if (type == "general-hk") {
      r.conditions.general_hk =
          GeneralHkHit{c.at("variant").get<int>(), subgroup_at(n, c.at("H")), subgroup_at(n, c.at("K"))};
    } else if (type == "iso-translate") {
      IsoTranslateHit hit;
      hit.method = enum_from<IsoMethod>(c.at("method").get<std::string>(),
                                        {IsoMethod::multiplier, IsoMethod::canonical_form});
      if (hit.method == IsoMethod::multiplier) hit.multiplier = c.at("m").get<int>();
      r.conditions.iso_translate = hit;
    } else if (type == "xe-c4") {
      r.conditions.xe_c4 = c.at("m").get<int>();
    } else if (type == "xe-general") {
      r.conditions.xe_general = XeGeneralHit{
          enum_from<XeFamily>(c.at("family").get<std::string>(), {XeFamily::multiplier, XeFamily::even_cover}),
          subgroup_at(n, c.at("H"))};
    } else {
      throw ParseError("unknown condition '" + type + "'");
    }
  }
  for (const Json& w : j.at("witnesses")) {
    try {
      r.witnesses.push_back({w.at("source").get<std::string>(),
                             PermPair{Permutation(w.at("alpha").get<std::vector<int>>()),
                                      Permutation(w.at("beta").get<std::vector<int>>())}});
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  r.unexplained = j.at("unexplained").get<bool>();
  const Json& flags = j.at("flags");
  r.annotated = flags.at("annotated").get<bool>();
  r.even_part_empty = flags.at("evenPartEmpty").get<bool>();
  r.odd_part_empty = flags.at("oddPartEmpty").get<bool>();
  r.aux_loops = flags.at("auxLoops").get<bool>();
  return r;
}

}  // namespace

std::string report_to_json(const StabilityReport& report, int indent) {
  return to_json_impl(report).dump(indent);
}

StabilityReport report_from_json(std::string_view text) {
  try {
    return from_json_impl(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace circstab
