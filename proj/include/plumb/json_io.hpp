#pragma once

#include <nlohmann/json.hpp>

#include "plumb/certificate.hpp"
#include "plumb/classify.hpp"
#include "plumb/laufer.hpp"
#include "plumb/seifert.hpp"

namespace plumb {

using json = nlohmann::json;

namespace detail {

inline json claim_value_json(const ClaimValue& v) {
  if (auto b = std::get_if<bool>(&v)) return *b;
  return to_string(std::get<Rational>(v));
}

inline ClaimValue claim_value_from_json(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("claim value must be a boolean or a \"p/q\" string");
}

inline const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("certificate node lacks '") + key + "'");
  return j.at(key);
}

} // namespace detail

inline json cycle_json(const Cycle& c) {
  json out = json::object();
  for (const auto& [v, k] : c) out[v] = k;
  return out;
}

inline json seifert_json(const SeifertData& sd) {
  json legs = json::array();
  for (const auto& leg : sd.legs) legs.push_back({leg.alpha.str(), leg.omega.str()});
  return {{"e0", sd.e0.str()}, {"legs", legs}};
}

inline SeifertData seifert_from_json(const json& j) {
  SeifertData sd;
  sd.e0 = Integer(detail::require_field(j, "e0").get<std::string>());
  for (const auto& leg : detail::require_field(j, "legs")) {
    if (!leg.is_array() || leg.size() != 2) throw InputError("Seifert leg must be [alpha, omega]");
    sd.legs.push_back({Integer(leg[0].get<std::string>()), Integer(leg[1].get<std::string>())});
  }
  std::sort(sd.legs.begin(), sd.legs.end());
  return sd;
}

inline json to_json(const CertificateTree& c) {
  json j;
  j["graph"] = serialize(c.graph);
  j["tag"] = to_string(c.tag);
  if (c.cut) j["edge"] = {c.cut->first, c.cut->second};
  if (c.r) j["r"] = to_string(*c.r);
  if (c.filled_v) j["filled_v"] = serialize(*c.filled_v);
  if (!c.jump_part.empty()) j["jump_part"] = c.jump_part;
  if (c.blown_up_vertex) j["blown_up_vertex"] = *c.blown_up_vertex;
  if (c.seifert) j["seifert"] = seifert_json(*c.seifert);
  json claims = json::array();
  for (const auto& cl : c.claims) {
    json k = {{"kind", cl.kind},
              {"subject", cl.subject},
              {"expected", detail::claim_value_json(cl.expected)},
              {"got", detail::claim_value_json(cl.got)}};
    if (!cl.vertices.empty()) k["vertices"] = cl.vertices;
    claims.push_back(std::move(k));
  }
  j["claims"] = std::move(claims);
  json children = json::array();
  for (const auto& ch : c.children) children.push_back(to_json(ch));
  j["children"] = std::move(children);
  return j;
}

/// Structural decoding only; the contents are validated by check_certificate.
inline CertificateTree certificate_from_json(const json& j) {
  using detail::require_field;
  CertificateTree c;
  try {
    c.graph = parse_graph(require_field(j, "graph").get<std::string>());
    c.tag = parse_cert_tag(require_field(j, "tag").get<std::string>());
    if (j.contains("edge")) {
      const auto& e = j.at("edge");
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair of vertex ids");
      c.cut = std::make_pair(e[0].get<std::string>(), e[1].get<std::string>());
    }
    if (j.contains("r")) c.r = parse_rational(j.at("r").get<std::string>());
    if (j.contains("filled_v")) c.filled_v = parse_graph(j.at("filled_v").get<std::string>());
    if (j.contains("jump_part")) c.jump_part = j.at("jump_part").get<std::vector<VertexId>>();
    if (j.contains("blown_up_vertex")) c.blown_up_vertex = j.at("blown_up_vertex").get<std::string>();
    if (j.contains("seifert")) c.seifert = seifert_from_json(j.at("seifert"));
    for (const auto& k : require_field(j, "claims")) {
      Claim cl{require_field(k, "kind").get<std::string>(), require_field(k, "subject").get<std::string>(),
               detail::claim_value_from_json(require_field(k, "expected")),
               detail::claim_value_from_json(require_field(k, "got")),
               {}};
      if (k.contains("vertices")) cl.vertices = k.at("vertices").get<std::vector<VertexId>>();
      c.claims.push_back(std::move(cl));
    }
    for (const auto& ch : require_field(j, "children")) c.children.push_back(certificate_from_json(ch));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  return c;
}

/// Field names are fixed; rationals are "p/q" strings and n/a values are null.
inline json to_json(const ClassificationReport& r) {
  auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  json j;
  j["negative_definite"] = r.negative_definite;
  j["det"] = to_string(r.det);
  j["zhs"] = r.zhs;
  j["rational"] = opt(r.rational);
  j["l_space"] = opt(r.l_space);
  j["lo"] = opt(r.pi1_left_orderable);
  j["taut_foliation"] = opt(r.taut_foliation);
  j["m"] = r.m_gamma ? json(*r.m_gamma) : json(nullptr);
  j["bad_set"] = r.bad_set ? json(std::vector<VertexId>(r.bad_set->begin(), r.bad_set->end())) : json(nullptr);
  if (r.m_is_upper_bound) j["m_is_upper_bound"] = true;
  if (r.certificate_path) j["certificate"] = *r.certificate_path;
  return j;
}

inline json to_json(const ComputationSequence& seq) {
  json steps = json::array();
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& s = seq.steps[i];
    steps.push_back({{"step", i}, {"vertex", s.vertex}, {"pairing", s.pairing}, {"cycle", cycle_json(s.before)}});
  }
  return {{"steps", steps}, {"final", cycle_json(seq.final)}};
}

} // namespace plumb
