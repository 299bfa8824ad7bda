#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "addbase/arith.hpp"
#include "addbase/parallel.hpp"
#include "addbase/sumset.hpp"

namespace addbase {

enum class Verdict { Regular, Exceptional };

inline const char* to_string(Verdict v) { return v == Verdict::Regular ? "regular" : "exceptional"; }

struct ClassificationReport {
  GroupSubset set;
  OrderProfile profile;
  std::map<Elem, Verdict> verdictPerElement;
  std::size_t exceptionalCount = 0;
  std::map<Elem, bool> minimalAtOrder;  // removing the element makes h(A \ {a}) != G at h = niceOrder

  std::vector<Elem> exceptional() const {
    std::vector<Elem> out;
    for (const auto& [e, v] : verdictPerElement)
      if (v == Verdict::Exceptional) out.push_back(e);
    return out;
  }
};

/// <A - A> = G. On a finite group this holds iff some hA = G.
inline bool is_basis(const GroupSubset& a) {
  if (a.is_empty()) fail(ErrorCode::EmptySet, "is_basis of the empty set");
  return difference_closure(a).is_whole_group();
}

/// a is exceptional iff <A\{a} - A\{a}> != G.
inline bool is_exceptional(const GroupSubset& a, Elem x) {
  const auto rest = a.without(x);
  if (rest.is_empty()) return true;
  return !difference_closure(rest).is_whole_group();
}

inline std::size_t count_exceptional(const GroupSubset& a) {
  std::size_t n = 0;
  a.mask().for_each([&](std::size_t x) { n += is_exceptional(a, static_cast<Elem>(x)) ? 1 : 0; });
  return n;
}

inline ClassificationReport classify(const GroupSubset& a) {
  if (a.is_empty()) fail(ErrorCode::EmptySet, "classify of the empty set");
  if (!is_basis(a)) fail(ErrorCode::NotABasis, "<A - A> is a proper subgroup");
  if (a.size() < 2) fail(ErrorCode::TooSmall, "classification needs |A| >= 2");
  ClassificationReport r;
  r.set = a;
  r.profile = order_profile(a);
  const auto h = static_cast<std::uint64_t>(*r.profile.niceOrder);
  a.mask().for_each([&](std::size_t xi) {
    const Elem x = static_cast<Elem>(xi);
    const bool exc = is_exceptional(a, x);
    r.verdictPerElement[x] = exc ? Verdict::Exceptional : Verdict::Regular;
    if (exc) ++r.exceptionalCount;
    // a non-generating remainder can never cover G
    r.minimalAtOrder[x] = exc || !fold_sumset(a.without(x), h).is_full();
  });
  return r;
}

struct ExhaustiveFamily {};
using EFamily = std::variant<ExhaustiveFamily, std::vector<GroupSubset>>;

struct EFunctionalResult {
  std::size_t value = 0;
  std::optional<GroupSubset> witness;  // least (by mask / family position) set attaining value
  std::size_t examined = 0;            // sets with niceOrder exactly h
  bool degenerateGuard = false;        // h = 1 answered by the guard E(1) = 0
};

inline constexpr std::uint64_t kDefaultSubsetBudget = std::uint64_t{1} << 12;

/// Max exceptional count over all sets of niceOrder exactly h in the family.
/// Exhaustive mode walks masks 1 .. 2^|G|-1 in increasing order.
inline EFunctionalResult e_functional(const GroupPtr& group, int h, const EFamily& family = ExhaustiveFamily{},
                                      std::uint64_t budget = kDefaultSubsetBudget, unsigned threads = 1) {
  if (h < 1) fail(ErrorCode::BadParameters, "h must be >= 1");
  EFunctionalResult result;
  if (h == 1) {
    result.degenerateGuard = true;
    return result;
  }
  auto consider = [h](const GroupSubset& a, EFunctionalResult& acc) {
    if (a.size() < 2 || !is_basis(a)) return;
    const auto p = order_profile(a);
    if (p.niceOrder != h) return;
    ++acc.examined;
    const std::size_t c = count_exceptional(a);
    if (!acc.witness || c > acc.value) {
      acc.value = c;
      acc.witness = a;
    }
  };
  if (const auto* sets = std::get_if<std::vector<GroupSubset>>(&family)) {
    for (const auto& a : *sets) {
      if (!a.group().same_as(*group)) fail(ErrorCode::GroupMismatch, "family member over a different group");
      consider(a, result);
    }
    return result;
  }
  const std::size_t n = group->order();
  if (n >= 63 || (std::uint64_t{1} << n) > budget)
    fail(ErrorCode::BudgetExceeded, "exhaustive enumeration of 2^" + std::to_string(n) + " subsets exceeds budget " +
                                        std::to_string(budget));
  const std::uint64_t total = (std::uint64_t{1} << n) - 1;
  std::vector<EFunctionalResult> parts(kDefaultShards);
  parallel_shards(total, threads, kDefaultShards, [&](std::size_t s, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) consider(GroupSubset::from_mask(group, i + 1), parts[s]);
  });
  for (auto& p : parts) {
    result.examined += p.examined;
    if (p.witness && (!result.witness || p.value > result.value)) {
      result.value = p.value;
      result.witness = std::move(p.witness);
    }
  }
  return result;
}

struct TorsionCoverResult {
  bool covers = false;
  std::size_t uncovered = 0;
  std::uint64_t folds = 0;  // s * m
};

/// Checks smA = G for an m-torsion G and generating A with s >= Omega(|G|).
inline TorsionCoverResult torsion_cover_check(const GroupSubset& a, std::uint64_t m, std::uint64_t s) {
  const auto& g = a.group();
  if (m == 0 || !g.is_m_torsion(m))
    fail(ErrorCode::PreconditionViolated, "group " + g.spec() + " is not " + std::to_string(m) + "-torsion");
  if (a.is_empty() || !is_basis(a)) fail(ErrorCode::PreconditionViolated, "<A - A> != G");
  if (s < omega(g.order()))
    fail(ErrorCode::PreconditionViolated,
         "s = " + std::to_string(s) + " < Omega(|G|) = " + std::to_string(omega(g.order())));
  TorsionCoverResult r;
  r.folds = s * m;
  const auto cover = fold_sumset(a, r.folds);
  r.covers = cover.is_full();
  r.uncovered = g.order() - cover.size();
  return r;
}

/// |G / mG| for m = 1..h.
inline std::map<std::uint64_t, std::uint64_t> quotient_sizes(const GroupPtr& group, std::uint64_t h) {
  std::map<std::uint64_t, std::uint64_t> sizes;
  for (std::uint64_t m = 1; m <= h; ++m) sizes[m] = m_multiple_subgroup(group, m).coset_count();
  return sizes;
}

/// h^2 + h * max_{1<=m<=h} Omega(|G/mG|) + h - 1.
inline std::uint64_t bound_x_general(std::uint64_t h, const std::map<std::uint64_t, std::uint64_t>& quotientSizes) {
  if (h == 0) fail(ErrorCode::BadParameters, "h must be >= 1");
  unsigned worst = 0;
  for (std::uint64_t m = 1; m <= h; ++m) {
    auto it = quotientSizes.find(m);
    if (it == quotientSizes.end()) fail(ErrorCode::BadParameters, "missing |G/mG| for m = " + std::to_string(m));
    if (it->second == 0) fail(ErrorCode::BadParameters, "quotient sizes must be >= 1");
    worst = std::max(worst, omega(it->second));
  }
  return h * h + h * worst + h - 1;
}

struct TorsionBounds {
  std::optional<std::int64_t> upper;  // ph + p - 1, for h >= p
  std::optional<std::int64_t> lower;  // 2h - 3p + 3, for 2h >= 3(p - 1)
};

inline TorsionBounds bound_x_torsion(std::int64_t p, std::int64_t h) {
  if (!is_prime(static_cast<std::uint64_t>(std::max<std::int64_t>(p, 0))))
    fail(ErrorCode::BadParameters, std::to_string(p) + " is not prime");
  TorsionBounds b;
  if (h >= p) b.upper = p * h + p - 1;
  if (2 * h >= 3 * (p - 1)) b.lower = 2 * h - 3 * p + 3;
  return b;
}

/// floor(h(h+4)/3)
constexpr std::uint64_t x_lower_value(std::uint64_t h) { return h * (h + 4) / 3; }

struct BoundReport {
  std::uint64_t h = 0;
  std::uint64_t generalUpper = 0;
  std::optional<std::int64_t> torsionUpper;
  std::uint64_t xLower = 0;
};

inline BoundReport bound_report(const GroupPtr& group, std::uint64_t h) {
  BoundReport r;
  r.h = h;
  r.generalUpper = bound_x_general(h, quotient_sizes(group, h));
  r.xLower = x_lower_value(h);
  const auto e = group->exponent();
  if (is_prime(e)) r.torsionUpper = bound_x_torsion(static_cast<std::int64_t>(e), static_cast<std::int64_t>(h)).upper;
  return r;
}

struct BadElementReport {
  std::map<Elem, std::optional<int>> orderWithout;  // niceOrder of A \ {b}
  std::size_t badCount = 0;                          // entries that are None or >= 4
};

/// Descriptive only: niceOrder of A \ {b} for each b, for A with niceOrder <= 2.
inline BadElementReport bad_element_report(const GroupSubset& a) {
  if (a.is_empty()) fail(ErrorCode::EmptySet, "bad_element_report of the empty set");
  const auto p = order_profile(a);
  if (!p.niceOrder || *p.niceOrder > 2) fail(ErrorCode::NotOrderTwo, "A is not a nice basis of order <= 2");
  BadElementReport r;
  a.mask().for_each([&](std::size_t bi) {
    const Elem b = static_cast<Elem>(bi);
    const auto rest = a.without(b);
    std::optional<int> ord;
    if (!rest.is_empty()) ord = order_profile(rest).niceOrder;
    r.orderWithout[b] = ord;
    if (!ord || *ord >= 4) ++r.badCount;
  });
  return r;
}

}  // namespace addbase
