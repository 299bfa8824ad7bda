// One line per acceptance criterion; exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "addbase.hpp"

using namespace addbase;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

Outcome from_suite(const Json& rep, double elapsed, double limit) {
  Outcome o;
  o.pass = rep.at("pass").get<bool>() && (limit <= 0 || elapsed < limit);
  o.detail = fmt_seconds(elapsed);
  if (limit > 0) o.detail += " (limit " + fmt_seconds(limit) + ")";
  return o;
}

Outcome criterion_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = suite_criterion_equivalence(1);
  auto o = from_suite(rep, seconds_since(t0), 60);
  std::size_t mismatches = 0, bases = 0;
  for (const auto& c : rep["checks"]) {
    mismatches += c["mismatches"].get<std::size_t>();
    bases += c["bases"].get<std::size_t>();
  }
  o.detail = "n=2..10, " + std::to_string(bases) + " bases, " + std::to_string(mismatches) + " mismatches, " +
             o.detail;
  return o;
}

Outcome e_bound() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = suite_e_bound(1);
  auto o = from_suite(rep, seconds_since(t0), 0);
  std::size_t violations = 0, large = 0;
  std::string where;
  for (const auto& c : rep["checks"]) {
    const auto v = c["violations"].get<std::size_t>();
    violations += v;
    large += c["violationsWithSizeAtLeastOrderPlus2"].get<std::size_t>();
    if (v) where += (where.empty() ? "" : " ") + c["group"].get<std::string>() + ":" + std::to_string(v);
  }
  o.detail = std::to_string(violations) + " violations";
  if (!where.empty()) o.detail += " [" + where + "]";
  o.detail += ", " + std::to_string(large) + " with |A| >= h+2";
  return o;
}

Outcome fpt() {
  const auto rep = suite_fpt(1);
  Outcome o{rep["pass"].get<bool>(), ""};
  for (const auto& c : rep["checks"]) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += "(" + std::to_string(c["p"].get<int>()) + "," + std::to_string(c["h"].get<int>()) + "," +
                std::to_string(c["N"].get<int>()) + ") nice=" + c["niceOrder"].dump() +
                " E=" + c["exceptional"].dump();
  }
  return o;
}

Outcome vs3() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = suite_vs3(1);
  auto o = from_suite(rep, seconds_since(t0), 30);
  std::size_t ok = 0;
  for (const auto& c : rep["checks"]) ok += c["pass"].get<bool>() ? 1 : 0;
  o.detail = std::to_string(ok) + "/5 (p,d) cases, " + o.detail;
  return o;
}

Outcome xlower() {
  const auto rep = suite_xlower(1);
  Outcome o{rep["pass"].get<bool>(), ""};
  for (const auto& c : rep["checks"]) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += "h=" + std::to_string(c["h"].get<int>()) + " Z/" + std::to_string(c["g"].get<int>()) + " " +
                c["witness"].dump() + " nice=" + c["profile"]["niceOrder"].dump();
  }
  return o;
}

Outcome torsion() {
  const auto rep = suite_torsion(1);
  Outcome o{rep["pass"].get<bool>(), ""};
  for (const auto& c : rep["checks"]) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += c["group"].get<std::string>() + " " + std::to_string(c["generatingSubsets"].get<std::size_t>()) +
                " sets, " + std::to_string(c["violations"].get<std::size_t>()) + " violations";
  }
  return o;
}

Outcome minimal() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = suite_minimal(1);
  auto o = from_suite(rep, seconds_since(t0), 120);
  std::string d;
  for (const auto& c : rep["checks"]) {
    if (!d.empty()) d += "; ";
    d += c["variant"].get<std::string>() + "(" + std::to_string(c["K"].get<int>()) + "," +
         std::to_string(c["h"].get<int>()) + ") " + std::to_string(c["witnessesFound"].get<std::size_t>()) + "/" +
         std::to_string(c["basisSize"].get<std::size_t>()) + " witnesses, interior " +
         std::to_string(c["interiorCovered"].get<std::size_t>()) + "/" +
         std::to_string(c["interiorTotal"].get<std::size_t>());
  }
  o.detail = d + ", " + o.detail;
  return o;
}

Outcome ternary() {
  const auto rep = suite_ternary(1);
  return {rep["pass"].get<bool>(), "|n| <= 3^7 roundtrip, K <= 7 bijective"};
}

Outcome bounds() {
  const auto rep = suite_bounds(1);
  Outcome o{rep["pass"].get<bool>(), ""};
  for (const auto& c : rep["checks"]) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += c["name"].get<std::string>() + (c["pass"].get<bool>() ? " ok" : " FAIL");
  }
  return o;
}

Outcome determinism() {
  Outcome o{true, ""};
  std::size_t compared = 0;
  std::vector<std::string> bad;
  const std::string dir = ADDBASE_GOLDEN_DIR;
  const auto survey_golden = read_file(dir + "/survey/hCap2_nMax10.json");
  for (unsigned t : {1u, 2u, 8u}) {
    HarnessOptions opt;
    opt.threads = t;
    const auto out = dump_canonical(cmd_survey_smallh(2, 10, opt).to_json());
    ++compared;
    if (!survey_golden || out != *survey_golden) bad.push_back("survey@" + std::to_string(t));
  }
  for (const auto& [name, fn] : verify_suites()) {
    const auto golden = read_file(dir + "/verify/" + name + ".json");
    for (unsigned t : {1u, 2u, 8u}) {
      ++compared;
      if (!golden || dump_canonical(fn(t)) != *golden) bad.push_back(name + "@" + std::to_string(t));
    }
  }
  o.pass = bad.empty();
  o.detail = std::to_string(compared - bad.size()) + "/" + std::to_string(compared) + " outputs match golden";
  for (const auto& b : bad) o.detail += " " + b;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"criterion equivalence", criterion_equivalence},
      {"E-bound exceptional count <= h-1", e_bound},
      {"F_p[t] example", fpt},
      {"vs3 clauses", vs3},
      {"X lower-bound witnesses", xlower},
      {"torsion covering", torsion},
      {"minimal-basis model", minimal},
      {"balanced ternary", ternary},
      {"formula calculators", bounds},
      {"determinism vs golden", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
