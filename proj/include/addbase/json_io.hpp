#pragma once

#include <string>

#include "addbase/constructions.hpp"
#include "addbase/group_spec.hpp"
#include "json.hpp"

namespace addbase {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "addbase 0.1.0";

inline Json element_json(const FiniteAbelianGroup& g, Elem x) { return Json(g.coords(x)); }

inline Json elements_json(const GroupSubset& a) {
  Json arr = Json::array();
  a.mask().for_each([&](std::size_t x) { arr.push_back(element_json(a.group(), static_cast<Elem>(x))); });
  return arr;
}

inline Json labels_json(const GroupSubset& a) {
  Json arr = Json::array();
  a.mask().for_each([&](std::size_t x) { arr.push_back(a.group().label(static_cast<Elem>(x))); });
  return arr;
}

inline Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
inline Json optional_json(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

inline Json profile_json(const OrderProfile& p) {
  return Json{{"generatesByDifferences", p.generatesByDifferences},
              {"niceOrder", optional_json(p.niceOrder)},
              {"weakNiceOrder", optional_json(p.weakNiceOrder)},
              {"stabilization", p.stabilization}};
}

inline OrderProfile profile_from_json(const Json& j) {
  OrderProfile p;
  p.generatesByDifferences = j.at("generatesByDifferences").get<bool>();
  if (!j.at("niceOrder").is_null()) p.niceOrder = j.at("niceOrder").get<int>();
  if (!j.at("weakNiceOrder").is_null()) p.weakNiceOrder = j.at("weakNiceOrder").get<int>();
  p.stabilization = j.at("stabilization").get<int>();
  return p;
}

inline GroupSubset subset_from_json(const GroupPtr& group, const Json& elements) {
  GroupSubset a(group);
  for (const auto& e : elements) a.insert(group->index(e.get<std::vector<std::int64_t>>()));
  return a;
}

inline Json witness_json(const WitnessRecord& w) {
  Json params = Json::object();
  for (const auto& [k, v] : w.params) params[k] = v;
  Json extra = Json::object();
  for (const auto& [k, v] : w.extraChecks) extra[k] = v;
  return Json{{"params", params},
              {"groupSpec", w.set.group().spec()},
              {"elements", elements_json(w.set)},
              {"profile", profile_json(w.verifiedProfile)},
              {"extraChecks", extra},
              {"toolVersion", kToolVersion}};
}

/// Parses a witness record and recomputes its profile; a stored profile that
/// disagrees with the recomputation is a VerificationFailed error.
inline WitnessRecord witness_from_json(const Json& j) {
  WitnessRecord w;
  try {
    for (const auto& [k, v] : j.at("params").items()) w.params[k] = v.get<std::int64_t>();
    const auto group = parse_group_spec(j.at("groupSpec").get<std::string>());
    w.set = subset_from_json(group, j.at("elements"));
    for (const auto& [k, v] : j.at("extraChecks").items()) w.extraChecks[k] = v.get<bool>();
    w.verifiedProfile = profile_from_json(j.at("profile"));
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed witness record: ") + e.what());
  }
  if (w.set.is_empty()) fail(ErrorCode::ParseError, "witness record has no elements");
  if (order_profile(w.set) != w.verifiedProfile)
    fail(ErrorCode::VerificationFailed, "stored profile does not match the recomputed one");
  return w;
}

/// Canonical text form used for every emitted document and golden file.
inline std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace addbase
