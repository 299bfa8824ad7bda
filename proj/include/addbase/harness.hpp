#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "addbase/survey.hpp"
#include "addbase/verify.hpp"

namespace addbase {

inline constexpr int kSchemaVersion = 1;

/// One command invocation. Failure leaves payload null unless the command
/// produced a report before failing (verify).
struct CommandResult {
  std::string command;
  Json inputsEcho = Json::object();
  Json payload = nullptr;
  Json status = Json{{"ok", true}};
  std::string toolVersion = kToolVersion;
  int exitCode = 0;

  bool ok() const { return status.at("ok").get<bool>(); }

  Json to_json() const {
    return Json{{"command", command},
                {"inputsEcho", inputsEcho},
                {"payload", payload},
                {"schemaVersion", kSchemaVersion},
                {"status", status},
                {"toolVersion", toolVersion}};
  }
};

struct HarnessOptions {
  unsigned threads = 1;
  std::optional<std::uint64_t> budget;  // overrides every enumeration cap
};

/// ADDBASE_BUDGET, if set to a positive integer.
inline std::optional<std::uint64_t> env_budget() {
  const char* v = std::getenv("ADDBASE_BUDGET");
  if (!v || !*v) return std::nullopt;
  const auto n = detail::parse_int(v);
  if (n <= 0) fail(ErrorCode::ParseError, "ADDBASE_BUDGET must be a positive integer");
  return static_cast<std::uint64_t>(n);
}

namespace detail {

inline void set_error(CommandResult& r, const Error& e) {
  r.status = Json{{"ok", false}, {"code", std::string(to_string(e.code()))}, {"message", e.detail()}};
  r.exitCode = exit_code(e.code());
}

template <class Fn>
CommandResult run_guarded(std::string command, Json echo, Fn&& body) {
  CommandResult r;
  r.command = std::move(command);
  r.inputsEcho = std::move(echo);
  try {
    body(r);
  } catch (const Error& e) {
    set_error(r, e);
  }
  return r;
}

inline Json label_list(const FiniteAbelianGroup& g, const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(g.label(x));
  return out;
}

inline Json coord_list(const FiniteAbelianGroup& g, const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(element_json(g, x));
  return out;
}

inline std::int64_t need_int(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) fail(ErrorCode::BadParameters, "missing parameter --" + key);
  return parse_int(it->second);
}

/// "fpt:p=2,h=3" -> {kind: fpt, p: 2, h: 3}
inline std::pair<std::string, std::map<std::string, std::int64_t>> parse_construct_ref(const std::string& ref) {
  const auto colon = ref.find(':');
  std::pair<std::string, std::map<std::string, std::int64_t>> out;
  out.first = trim(ref.substr(0, colon));
  if (colon == std::string::npos) return out;
  std::stringstream ss(ref.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ParseError, "expected key=value in '" + item + "'");
    out.second[trim(item.substr(0, eq))] = parse_int(item.substr(eq + 1));
  }
  return out;
}

}  // namespace detail

inline CommandResult cmd_order(const std::string& groupSpec, const std::string& setLiteral) {
  Json echo{{"group", groupSpec}, {"set", setLiteral}};
  return detail::run_guarded("order", echo, [&](CommandResult& r) {
    const auto group = parse_group_spec(groupSpec);
    const auto a = parse_set_literal(group, setLiteral);
    r.inputsEcho = Json{{"group", group->spec()}, {"set", elements_json(a)}};
    const auto p = order_profile(a);
    r.payload = profile_json(p);
    r.payload["elements"] = elements_json(a);
    r.payload["setSize"] = a.size();
  });
}

/// Either setLiteral or construct ("fpt:p=..,h=..") supplies the set; for fpt the
/// truncation N is the factor count of the poly(p,N) group.
inline CommandResult cmd_classify(const std::string& groupSpec, const std::string& setLiteral,
                                  const std::string& construct = "") {
  Json echo{{"group", groupSpec}};
  if (!construct.empty())
    echo["construct"] = construct;
  else
    echo["set"] = setLiteral;
  return detail::run_guarded("classify", echo, [&](CommandResult& r) {
    const auto group = parse_group_spec(groupSpec);
    std::optional<GroupSubset> set;
    if (!construct.empty()) {
      const auto [kind, kv] = detail::parse_construct_ref(construct);
      if (kind != "fpt") fail(ErrorCode::ParseError, "classify can only construct 'fpt', got '" + kind + "'");
      if (!kv.count("p") || !kv.count("h")) fail(ErrorCode::ParseError, "fpt needs p and h");
      const int p = static_cast<int>(kv.at("p"));
      const int N = static_cast<int>(group->rank());
      if (group->label_style() != LabelStyle::Polynomial || group->moduli().front() != p)
        fail(ErrorCode::BadParameters, "fpt with p = " + std::to_string(p) + " needs a poly(" + std::to_string(p) +
                                           ",N) group, got " + group->spec());
      set = fpt_example(p, static_cast<int>(kv.at("h")), N).set;
      r.inputsEcho["construct"] = Json{{"kind", kind}, {"p", p}, {"h", kv.at("h")}, {"N", N}};
    } else {
      set = parse_set_literal(group, setLiteral);
      r.inputsEcho["set"] = elements_json(*set);
    }
    r.inputsEcho["group"] = group->spec();
    const auto rep = classify(*set);
    Json per = Json::array();
    for (const auto& [e, v] : rep.verdictPerElement)
      per.push_back(Json{{"element", element_json(*group, e)},
                         {"label", group->label(e)},
                         {"verdict", to_string(v)},
                         {"minimalAtOrder", rep.minimalAtOrder.at(e)}});
    r.payload = Json{{"elements", elements_json(*set)},
                     {"profile", profile_json(rep.profile)},
                     {"perElement", per},
                     {"exceptional", detail::coord_list(*group, rep.exceptional())},
                     {"exceptionalLabels", detail::label_list(*group, rep.exceptional())},
                     {"exceptionalCount", rep.exceptionalCount}};
  });
}

/// Kinds: balanced-ternary (n), minimal (variant, K, h), fpt (p, h, N),
/// vsd (p, d), vs2check (p, d, alphas).
inline CommandResult cmd_construct(const std::string& kind, const std::map<std::string, std::string>& params,
                                   const HarnessOptions& opt = {}) {
  Json echo{{"kind", kind}};
  for (const auto& [k, v] : params) echo[k] = v;
  return detail::run_guarded("construct", echo, [&](CommandResult& r) {
    using detail::need_int;
    if (kind == "balanced-ternary") {
      const auto n = need_int(params, "n");
      const auto d = balanced_ternary(n);
      r.inputsEcho = Json{{"kind", kind}, {"n", n}};
      r.payload = Json{{"n", n}, {"digits", d.digits}, {"value", d.value()}, {"roundtrip", d.value() == n}};
    } else if (kind == "minimal") {
      auto it = params.find("variant");
      const std::string vname = it == params.end() ? "ternary" : it->second;
      MinimalVariant v;
      if (vname == "ternary")
        v = MinimalVariant::Ternary;
      else if (vname == "chain2")
        v = MinimalVariant::Chain2;
      else
        fail(ErrorCode::BadParameters, "unknown variant '" + vname + "'");
      const int K = static_cast<int>(need_int(params, "K"));
      const int h = static_cast<int>(need_int(params, "h"));
      r.inputsEcho = Json{{"kind", kind}, {"variant", vname}, {"K", K}, {"h", h}};
      const auto m = minimal_basis_model(K, h, v);
      r.payload = minimal_json(v, K, h, opt.threads, true);
      r.payload["basis"] = elements_json(m.basis);
      Json classes = Json::array();
      for (const auto& c : m.model.classPartition) classes.push_back(c);
      r.payload["classPartition"] = classes;
    } else if (kind == "fpt") {
      const int p = static_cast<int>(need_int(params, "p"));
      const int h = static_cast<int>(need_int(params, "h"));
      const int N = static_cast<int>(need_int(params, "N"));
      r.inputsEcho = Json{{"kind", kind}, {"p", p}, {"h", h}, {"N", N}};
      const auto ex = fpt_example(p, h, N);
      r.payload = fpt_check(p, h, N);
      r.payload["groupSpec"] = ex.set.group().spec();
      r.payload["elements"] = elements_json(ex.set);
    } else if (kind == "vsd") {
      const int p = static_cast<int>(need_int(params, "p"));
      const int d = static_cast<int>(need_int(params, "d"));
      r.inputsEcho = Json{{"kind", kind}, {"p", p}, {"d", d}};
      const auto a = vsd_basis(p, d);
      auto checks = vs3_json(p, d);
      r.payload = Json{{"groupSpec", a.group().spec()},
                       {"elements", elements_json(a)},
                       {"profile", profile_json(order_profile(a))},
                       {"checks", checks}};
    } else if (kind == "vs2check") {
      const int p = static_cast<int>(need_int(params, "p"));
      const int d = static_cast<int>(need_int(params, "d"));
      auto it = params.find("alphas");
      if (it == params.end()) fail(ErrorCode::BadParameters, "missing parameter --alphas");
      const auto alphas = detail::parse_int_list(it->second);
      r.inputsEcho = Json{{"kind", kind}, {"p", p}, {"d", d}, {"alphas", alphas}};
      const bool formula = vs2_nice_check(p, d, alphas);
      const auto a = vs2_set(p, d, alphas);
      const bool brute = order_profile(a).niceOrder.has_value();
      r.payload = Json{{"groupSpec", a.group().spec()},
                       {"elements", elements_json(a)},
                       {"formulaNice", formula},
                       {"bruteforceNice", brute},
                       {"agree", formula == brute}};
    } else {
      fail(ErrorCode::BadParameters, "unknown construction kind '" + kind + "'");
    }
  });
}

inline CommandResult cmd_search_xlower(int h, bool all = false, const HarnessOptions& opt = {}) {
  Json echo{{"h", h}, {"all", all}};
  return detail::run_guarded("search-xlower", echo, [&](CommandResult& r) {
    const auto s = search_x_lower_witness(h, opt.threads, all);
    r.payload = witness_json(s.record);
    if (all) {
      Json ws = Json::array();
      for (auto [a, b] : s.allWitnesses) ws.push_back(Json::array({a, b}));
      r.payload["allWitnesses"] = ws;
    }
  });
}

inline Json survey_json(const SurveyResult& s) {
  Json groups = Json::array(), rows = Json::array();
  for (const auto& g : s.groups)
    groups.push_back(Json{{"groupSpec", g.groupSpec},
                          {"qualifying", g.qualifying},
                          {"maxNiceOrder", g.maxNiceOrder},
                          {"argmaxMasks", g.argmaxMasks}});
  for (const auto& r : s.rows)
    rows.push_back(Json{{"groupSpec", r.groupSpec},
                        {"weakOrderCap", r.weakOrderCap},
                        {"setMask", r.setMask},
                        {"niceOrder", r.niceOrder},
                        {"isMaxForGroup", r.isMaxForGroup}});
  return Json{{"hCap", s.hCap}, {"nMax", s.nMax}, {"groups", groups}, {"rows", rows}};
}

inline std::string survey_tsv(const SurveyResult& s) {
  std::string out = "groupSpec\tweakOrderCap\tsetMask\tniceOrder\tisMaxForGroup\n";
  for (const auto& r : s.rows)
    out += r.groupSpec + "\t" + std::to_string(r.weakOrderCap) + "\t" + std::to_string(r.setMask) + "\t" +
           std::to_string(r.niceOrder) + "\t" + (r.isMaxForGroup ? "true" : "false") + "\n";
  return out;
}

inline CommandResult cmd_survey_smallh(int hCap, int nMax, const HarnessOptions& opt = {},
                                       const std::string& tableOut = "") {
  Json echo{{"hCap", hCap}, {"nMax", nMax}};
  return detail::run_guarded("survey", echo, [&](CommandResult& r) {
    const auto s = survey_smallh(hCap, nMax, opt.threads, opt.budget.value_or(kDefaultSurveyBudget));
    r.payload = survey_json(s);
    if (!tableOut.empty()) {
      std::ofstream f(tableOut, std::ios::binary);
      if (!f) fail(ErrorCode::ParseError, "cannot write table file '" + tableOut + "'");
      f << survey_tsv(s);
    }
  });
}

inline std::optional<std::string> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Runs one suite or "all". With a golden directory, each suite report is also
/// compared byte-for-byte with <goldenDir>/verify/<suite>.json.
inline CommandResult cmd_verify(const std::string& suite, const HarnessOptions& opt = {},
                                const std::string& goldenDir = "") {
  Json echo{{"suite", suite}};
  return detail::run_guarded("verify", echo, [&](CommandResult& r) {
    std::vector<std::string> names;
    if (suite == "all") {
      for (const auto& s : verify_suites()) names.push_back(s.first);
    } else {
      bool known = false;
      for (const auto& s : verify_suites()) known = known || s.first == suite;
      if (!known) fail(ErrorCode::UnknownSuite, "no verify suite named '" + suite + "'");
      names.push_back(suite);
    }
    Json reports = Json::array();
    std::vector<std::string> failed;
    for (const auto& name : names) {
      Json rep = run_suite(name, opt.threads);
      bool ok = rep.at("pass").get<bool>();
      Json entry{{"suite", name}, {"pass", ok}, {"report", rep}};
      if (!goldenDir.empty()) {
        const auto golden = read_file(goldenDir + "/verify/" + name + ".json");
        const std::string state = !golden ? "missing" : *golden == dump_canonical(rep) ? "match" : "mismatch";
        entry["golden"] = state;
        ok = ok && state == "match";
      }
      if (!ok) failed.push_back(name);
      reports.push_back(std::move(entry));
    }
    r.payload = Json{{"suites", reports}, {"pass", failed.empty()}, {"failed", failed}};
    if (!failed.empty()) {
      std::string msg = "failed suites:";
      for (const auto& f : failed) msg += " " + f;
      fail(ErrorCode::VerificationFailed, msg);
    }
  });
}

inline CommandResult cmd_bounds(const std::string& groupSpec, int h) {
  Json echo{{"group", groupSpec}, {"h", h}};
  return detail::run_guarded("bounds", echo, [&](CommandResult& r) {
    if (h < 1) fail(ErrorCode::BadParameters, "h must be >= 1");
    const auto group = parse_group_spec(groupSpec);
    r.inputsEcho["group"] = group->spec();
    const auto sizes = quotient_sizes(group, static_cast<std::uint64_t>(h));
    const auto b = bound_report(group, static_cast<std::uint64_t>(h));
    Json qs = Json::object();
    for (auto [m, s] : sizes) qs[std::to_string(m)] = s;
    r.payload = Json{{"quotientSizes", qs},
                     {"generalUpper", b.generalUpper},
                     {"torsionUpper", optional_json(b.torsionUpper)},
                     {"xLower", b.xLower}};
  });
}

inline CommandResult cmd_efunctional(const std::string& groupSpec, int h, const HarnessOptions& opt = {}) {
  Json echo{{"group", groupSpec}, {"h", h}};
  return detail::run_guarded("efunctional", echo, [&](CommandResult& r) {
    const auto group = parse_group_spec(groupSpec);
    r.inputsEcho["group"] = group->spec();
    const auto e = e_functional(group, h, ExhaustiveFamily{}, opt.budget.value_or(kDefaultSubsetBudget), opt.threads);
    r.payload = Json{{"value", e.value},
                     {"examined", e.examined},
                     {"degenerateGuard", e.degenerateGuard},
                     {"witness", e.witness ? elements_json(*e.witness) : Json(nullptr)}};
  });
}

inline CommandResult cmd_bad_elements(const std::string& groupSpec, const std::string& setLiteral) {
  Json echo{{"group", groupSpec}, {"set", setLiteral}};
  return detail::run_guarded("bad-elements", echo, [&](CommandResult& r) {
    const auto group = parse_group_spec(groupSpec);
    const auto a = parse_set_literal(group, setLiteral);
    r.inputsEcho = Json{{"group", group->spec()}, {"set", elements_json(a)}};
    const auto rep = bad_element_report(a);
    Json per = Json::array();
    for (const auto& [b, ord] : rep.orderWithout)
      per.push_back(Json{{"element", element_json(*group, b)}, {"niceOrderWithout", optional_json(ord)}});
    r.payload = Json{{"perElement", per}, {"badCount", rep.badCount}};
  });
}

namespace detail {

inline void table_lines(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) table_lines(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
    for (std::size_t i = 0; i < j.size(); ++i) table_lines(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out += prefix + "\t" + j.dump() + "\n";
  }
}

}  // namespace detail

/// Flat "path<TAB>value" rendering for --format table.
inline std::string render_table(const CommandResult& r) {
  std::string out;
  detail::table_lines(r.to_json(), "", out);
  return out;
}

}  // namespace addbase
