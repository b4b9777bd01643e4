#include "affgr/report_json.hpp"

#include "affgr/cache.hpp"
#include "affgr/element_text.hpp"
#include "affgr/error.hpp"

namespace affgr {

using nlohmann::json;

json make_envelope(const std::string& command, const std::string& type_label, json payload) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["type_label"] = type_label;
  j["convention_hash"] = convention_hash();
  j["payload"] = std::move(payload);
  return j;
}

void to_json(json& j, const LieType& t) { j = t.label(); }
void from_json(const json& j, LieType& t) { t = parse_type(j.get<std::string>()); }

void to_json(json& j, const GradedPoly& p) { j = p.coeffs(); }
void from_json(const json& j, GradedPoly& p) { p = GradedPoly(j.get<std::vector<int64_t>>()); }

void to_json(json& j, const PDStatus& s) { j = to_string(s); }
void from_json(const json& j, PDStatus& s) {
  const auto v = j.get<std::string>();
  for (PDStatus c : {PDStatus::NotPalindromic, PDStatus::PalindromicOnly, PDStatus::RationalOnly,
                     PDStatus::Integral})
    if (to_string(c) == v) {
      s = c;
      return;
    }
  throw ParseError("unknown PD status '" + v + "'");
}

void to_json(json& j, const TypeReport& r) {
  j = json{{"type", r.type},
           {"I_lambda0", r.I_lambda0},
           {"levi_descriptor", r.levi_descriptor},
           {"levi_orbit_dim", r.levi_orbit_dim},
           {"levi_poincare", r.levi_poincare},
           {"chain", r.chain},
           {"chain_coeffs", r.chain_coeffs},
           {"pd_status", r.pd_status},
           {"bott_nodes", r.bott_nodes},
           {"minuscule_nodes", r.minuscule_nodes},
           {"smooth_schubert_genv", r.smooth_schubert_genv},
           {"smooth_sources_agree", r.smooth_sources_agree},
           {"exponents", r.exponents},
           {"e_top", r.e_top},
           {"max_smooth_schubert_dim",
            r.max_smooth_schubert_dim ? json(*r.max_smooth_schubert_dim) : json(nullptr)}};
}

void from_json(const json& j, TypeReport& r) {
  j.at("type").get_to(r.type);
  j.at("I_lambda0").get_to(r.I_lambda0);
  j.at("levi_descriptor").get_to(r.levi_descriptor);
  j.at("levi_orbit_dim").get_to(r.levi_orbit_dim);
  j.at("levi_poincare").get_to(r.levi_poincare);
  j.at("chain").get_to(r.chain);
  j.at("chain_coeffs").get_to(r.chain_coeffs);
  j.at("pd_status").get_to(r.pd_status);
  j.at("bott_nodes").get_to(r.bott_nodes);
  j.at("minuscule_nodes").get_to(r.minuscule_nodes);
  j.at("smooth_schubert_genv").get_to(r.smooth_schubert_genv);
  j.at("smooth_sources_agree").get_to(r.smooth_sources_agree);
  j.at("exponents").get_to(r.exponents);
  j.at("e_top").get_to(r.e_top);
  const auto& m = j.at("max_smooth_schubert_dim");
  r.max_smooth_schubert_dim = m.is_null() ? std::nullopt : std::optional<int>(m.get<int>());
}

json levels_json(const AffineWeylGroup& G, const MinRepLevels& lv) {
  json levels = json::array();
  for (const auto& level : lv.by_length) {
    json row = json::array();
    for (const AffineElem& x : level) row.push_back(format_element(G, x));
    levels.push_back(std::move(row));
  }
  return json{{"max_length", lv.max_length}, {"sizes", lv.sizes()}, {"levels", std::move(levels)}};
}

json generating_json(const AffineWeylGroup& G, const GeneratingReport& r) {
  json steps = json::array();
  for (const GeneratingStep& s : r.steps) {
    json js{{"n", s.n},
            {"is_class", s.is_class},
            {"is_translation", s.is_translation},
            {"length", s.length},
            {"expected_length", s.expected_length},
            {"ok", s.ok()}};
    js["power"] = s.power ? json(format_translation_form(G, *s.power)) : json(nullptr);
    steps.push_back(std::move(js));
  }
  return json{{"base_length", r.base_length}, {"steps", std::move(steps)}, {"ok", r.ok()}};
}

}  // namespace affgr
