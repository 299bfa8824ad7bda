#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "addbase/analysis.hpp"
#include "addbase/group_spec.hpp"
#include "addbase/parallel.hpp"
#include "addbase/sumset.hpp"

namespace addbase {

// ---------------------------------------------------------------------------
// Balanced ternary

/// Digits in {-1, 0, 1}, least significant first, no trailing zeros.
struct BalancedTernaryDigits {
  std::vector<int> digits;

  std::int64_t value() const {
    std::int64_t v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = 3 * v + *it;
    return v;
  }
  friend bool operator==(const BalancedTernaryDigits&, const BalancedTernaryDigits&) = default;
};

inline BalancedTernaryDigits balanced_ternary(std::int64_t n) {
  BalancedTernaryDigits out;
  while (n != 0) {
    int r = static_cast<int>(((n % 3) + 3) % 3);
    if (r == 2) r = -1;
    out.digits.push_back(r);
    n = (n - r) / 3;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Direct-sum models and minimal bases

enum class MinimalVariant { Ternary, Chain2 };

inline const char* to_string(MinimalVariant v) { return v == MinimalVariant::Ternary ? "ternary" : "chain2"; }

/// G written as a "direct sum" of symmetric sets Lambda_0..Lambda_{K-1}: every x
/// is uniquely sum_i lambda_i(x). Index i belongs to class classOf[i].
struct DirectSumModel {
  GroupPtr group;
  std::vector<GroupSubset> lambdaSets;
  std::vector<std::vector<std::size_t>> classPartition;
  std::vector<std::size_t> classOf;
  // components[x * K + i] = lambda_i(x), filled by decompose()
  std::vector<Elem> components;

  std::size_t K() const noexcept { return lambdaSets.size(); }

  Elem component(Elem x, std::size_t i) const { return components[std::size_t{x} * K() + i]; }

  bool in_support(Elem x, std::size_t i) const { return component(x, i) != group->zero(); }

  /// Enumerates every combination of lambda choices; returns false when some
  /// element is hit twice (and leaves `components` partially filled).
  bool decompose() {
    const auto& g = *group;
    const std::size_t k = K();
    std::vector<std::vector<Elem>> choices;
    std::uint64_t product = 1;
    for (const auto& l : lambdaSets) {
      choices.push_back(l.elements());
      product *= choices.back().size();
    }
    if (product != g.order()) return false;
    components.assign(g.order() * k, 0);
    std::vector<bool> hit(g.order(), false);
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      Elem x = g.zero();
      for (std::size_t i = 0; i < k; ++i) x = g.add(x, choices[i][pick[i]]);
      if (hit[x]) return false;
      hit[x] = true;
      for (std::size_t i = 0; i < k; ++i) components[std::size_t{x} * k + i] = choices[i][pick[i]];
      std::size_t i = 0;
      while (i < k && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == k) break;
    }
    return true;
  }

  /// 0 in each Lambda_i, Lambda_i = -Lambda_i, and unique decomposition.
  bool verify() {
    for (const auto& l : lambdaSets)
      if (!l.contains(group->zero()) || !(l.negate() == l)) return false;
    return decompose();
  }
};

struct MinimalBasisModel {
  DirectSumModel model;
  GroupSubset basis;  // B = (union of A_j) \ {0}
  int h = 0;
  MinimalVariant variant = MinimalVariant::Ternary;
};

/// Ternary: G = Z/3^K with Lambda_i = {0, +-3^i}. Chain2: G = (Z/2)^K with
/// Lambda_i = {0, e_i}. Indices go to classes round-robin (i mod h); A_j is the
/// set of elements supported on class j.
inline MinimalBasisModel minimal_basis_model(int K, int h, MinimalVariant variant,
                                             std::uint64_t cap = kDefaultOrderCap) {
  if (h < 2 || h > K) fail(ErrorCode::BadParameters, "need 2 <= h <= K (got K=" + std::to_string(K) + ", h=" +
                                                         std::to_string(h) + ")");
  MinimalBasisModel m;
  m.h = h;
  m.variant = variant;
  auto& dm = m.model;
  if (variant == MinimalVariant::Ternary) {
    std::int64_t n = 1;
    for (int i = 0; i < K; ++i) {
      if (static_cast<std::uint64_t>(n) > cap / 3) fail(ErrorCode::OrderOverflow, "3^K exceeds the order cap");
      n *= 3;
    }
    dm.group = make_group({n}, cap);
    std::int64_t pw = 1;
    for (int i = 0; i < K; ++i, pw *= 3)
      dm.lambdaSets.push_back(GroupSubset::of(dm.group, {0, static_cast<Elem>(pw), static_cast<Elem>(n - pw)}));
  } else {
    dm.group = make_group(std::vector<std::int64_t>(static_cast<std::size_t>(K), 2), cap);
    for (int i = 0; i < K; ++i) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(K), 0);
      e[static_cast<std::size_t>(i)] = 1;
      dm.lambdaSets.push_back(GroupSubset::of(dm.group, {0, dm.group->index(e)}));
    }
  }
  dm.classPartition.assign(static_cast<std::size_t>(h), {});
  for (int i = 0; i < K; ++i) {
    dm.classOf.push_back(static_cast<std::size_t>(i % h));
    dm.classPartition[static_cast<std::size_t>(i % h)].push_back(static_cast<std::size_t>(i));
  }
  if (!dm.verify()) fail(ErrorCode::BadParameters, "lambda sets do not form a direct-sum decomposition");
  m.basis = GroupSubset(dm.group);
  for (Elem x = 1; x < dm.group->order(); ++x) {
    std::optional<std::size_t> cls;
    bool single = true;
    for (std::size_t i = 0; i < dm.K(); ++i) {
      if (!dm.in_support(x, i)) continue;
      if (cls && *cls != dm.classOf[i]) single = false;
      cls = dm.classOf[i];
    }
    if (single) m.basis.insert(x);
  }
  return m;
}

struct MinimalityWitness {
  Elem element = 0;
  std::optional<Elem> witness;  // x in hB \ h(B \ {a})
  bool canonical = false;       // witness has the form a + a_2 + ... + a_h, one term per other class
};

/// For each a in B, a witness that removing a shrinks hB. Tries the canonical
/// form first (least nonzero element of each other class), else the least
/// element of hB \ h(B \ {a}).
inline std::vector<MinimalityWitness> minimality_witnesses(const MinimalBasisModel& m, unsigned threads = 1) {
  const auto& dm = m.model;
  const auto& g = *dm.group;
  const auto hb = fold_sumset(m.basis, static_cast<std::uint64_t>(m.h));
  // least nonzero element supported on each class
  std::vector<Elem> least(static_cast<std::size_t>(m.h), 0);
  std::vector<std::size_t> class_of_elem(g.order(), 0);
  for (Elem x : m.basis.elements()) {
    for (std::size_t i = 0; i < dm.K(); ++i)
      if (dm.in_support(x, i)) class_of_elem[x] = dm.classOf[i];
    auto& slot = least[class_of_elem[x]];
    if (slot == 0) slot = x;
  }
  const auto elems = m.basis.elements();
  std::vector<MinimalityWitness> out(elems.size());
  parallel_shards(elems.size(), threads, kDefaultShards, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const Elem a = elems[idx];
      MinimalityWitness w;
      w.element = a;
      const auto reduced = fold_sumset(m.basis.without(a), static_cast<std::uint64_t>(m.h));
      Elem x = a;
      for (std::size_t j = 0; j < least.size(); ++j)
        if (j != class_of_elem[a]) x = g.add(x, least[j]);
      if (hb.contains(x) && !reduced.contains(x)) {
        w.witness = x;
        w.canonical = true;
      } else {
        auto diff = hb;
        diff.mask().subtract(reduced.mask());
        if (!diff.is_empty()) w.witness = diff.first();
      }
      out[idx] = w;
    }
  });
  return out;
}

struct InteriorCoverage {
  std::size_t interior = 0;
  std::size_t covered = 0;
  std::optional<Elem> firstMiss;
};

/// Elements whose support omits at least one index of every class, and how many lie in hB.
inline InteriorCoverage interior_coverage(const MinimalBasisModel& m) {
  const auto& dm = m.model;
  const auto hb = fold_sumset(m.basis, static_cast<std::uint64_t>(m.h));
  InteriorCoverage c;
  for (Elem x = 0; x < dm.group->order(); ++x) {
    bool interior = true;
    for (const auto& cls : dm.classPartition) {
      bool omits = false;
      for (auto i : cls) omits = omits || !dm.in_support(x, i);
      interior = interior && omits;
    }
    if (!interior) continue;
    ++c.interior;
    if (hb.contains(x)) {
      ++c.covered;
    } else if (!c.firstMiss) {
      c.firstMiss = x;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// The F_p[t] example with floor((h-1)/(p-1)) exceptional elements

struct FptExample {
  GroupSubset set;
  int p = 0, h = 0, N = 0;
  int k = 0;  // floor((h-1)/(p-1))
  int r = 0;  // h = k(p-1) + r + 1
  Elem extremal = 0;
  std::vector<Elem> expectedExceptional;  // t^0 .. t^{k-1}
};

inline Elem monomial(const FiniteAbelianGroup& g, int i, std::int64_t coeff = 1) {
  std::vector<std::int64_t> c(g.rank(), 0);
  c[static_cast<std::size_t>(i)] = coeff;
  return g.index(c);
}

/// {1, t, ..., t^{k-1}} u t^k F_p u ... u t^{k+r-1} F_p u t^{k+r} F_p[t], truncated to degree < N.
inline FptExample fpt_example(int p, int h, int N, std::uint64_t cap = kDefaultOrderCap) {
  if (!is_prime(static_cast<std::uint64_t>(std::max(p, 0)))) fail(ErrorCode::BadParameters, "p must be prime");
  if (h < 2) fail(ErrorCode::BadParameters, "h must be >= 2");
  FptExample ex;
  ex.p = p;
  ex.h = h;
  ex.N = N;
  ex.k = (h - 1) / (p - 1);
  ex.r = h - 1 - ex.k * (p - 1);
  if (N < ex.k + ex.r + 2)
    fail(ErrorCode::TruncationTooSmall,
         "N = " + std::to_string(N) + " < k + r + 2 = " + std::to_string(ex.k + ex.r + 2));
  const auto group = make_poly(p, N, cap);
  const auto& g = *group;
  ex.set = GroupSubset(group);
  for (int i = 0; i < ex.k; ++i) {
    ex.set.insert(monomial(g, i));
    ex.expectedExceptional.push_back(monomial(g, i));
  }
  for (int i = ex.k; i < ex.k + ex.r; ++i)
    for (int c = 0; c < p; ++c) ex.set.insert(monomial(g, i, c));
  const int tail = ex.k + ex.r;
  for (Elem x = 0; x < g.order(); ++x) {
    const auto c = g.coords(x);
    bool ok = true;
    for (int i = 0; i < tail; ++i) ok = ok && c[static_cast<std::size_t>(i)] == 0;
    if (ok) ex.set.insert(x);
  }
  std::vector<std::int64_t> ext(static_cast<std::size_t>(N), 0);
  for (int i = 0; i < ex.k; ++i) ext[static_cast<std::size_t>(i)] = p - 1;
  for (int i = ex.k; i < tail; ++i) ext[static_cast<std::size_t>(i)] = 1;
  ext[static_cast<std::size_t>(tail)] = 1;
  ex.extremal = g.index(ext);
  std::sort(ex.expectedExceptional.begin(), ex.expectedExceptional.end());
  return ex;
}

// ---------------------------------------------------------------------------
// Nice bases of (Z/p)^d of size d + 1

inline Elem unit_vector(const FiniteAbelianGroup& g, std::size_t i) {
  std::vector<std::int64_t> c(g.rank(), 0);
  c[i] = 1;
  return g.index(c);
}

/// {e_1, ..., e_d, e_1 + ... + e_d} in F(p,d), for d != 1 mod p.
inline GroupSubset vsd_basis(int p, int d, std::uint64_t cap = kDefaultOrderCap) {
  if (!is_prime(static_cast<std::uint64_t>(std::max(p, 0)))) fail(ErrorCode::BadParameters, "p must be prime");
  if (d < 1) fail(ErrorCode::BadParameters, "d must be >= 1");
  if (d % p == 1) fail(ErrorCode::DegenerateD, "d = " + std::to_string(d) + " is 1 mod " + std::to_string(p));
  const auto group = make_elementary(p, d, cap);
  GroupSubset a(group);
  std::vector<std::int64_t> all(static_cast<std::size_t>(d), 1);
  for (int i = 0; i < d; ++i) a.insert(unit_vector(*group, static_cast<std::size_t>(i)));
  a.insert(group->index(all));
  return a;
}

/// 0A u 1A u ... u hA, with 0A = {0}.
inline GroupSubset sums_of_at_most(const GroupSubset& a, std::uint64_t h) {
  auto acc = zero_fold(a.group_ptr());
  if (h >= 1) acc |= weak_union(a, h);
  return acc;
}

struct Vs3Checks {
  bool coverHalf = false;       // every x is a sum of <= floor((d+1)(p-1)/2) elements
  bool kMinusOneFails = false;  // (d(p-1) - 1)A != G
  bool kCovers = false;         // d(p-1)A = G
  bool vs1Tight = false;        // all-(p-1) vector needs exactly (p-1)d of e_1..e_d
  bool all() const { return coverHalf && kMinusOneFails && kCovers; }
};

inline Vs3Checks vs3_checks(int p, int d) {
  const auto a = vsd_basis(p, d);
  const auto& g = a.group();
  const std::uint64_t k = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(p - 1);
  Vs3Checks c;
  c.coverHalf = sums_of_at_most(a, static_cast<std::uint64_t>((d + 1) * (p - 1) / 2)).is_full();
  c.kMinusOneFails = k == 1 ? !zero_fold(a.group_ptr()).is_full() : !fold_sumset(a, k - 1).is_full();
  c.kCovers = fold_sumset(a, k).is_full();
  GroupSubset units(a.group_ptr());
  for (int i = 0; i < d; ++i) units.insert(unit_vector(g, static_cast<std::size_t>(i)));
  const Elem top = g.index(std::vector<std::int64_t>(static_cast<std::size_t>(d), p - 1));
  c.vs1Tight = fold_sumset(units, k).contains(top) && !sums_of_at_most(units, k - 1).contains(top);
  return c;
}

/// sum(alphas) != 1 mod p.
inline bool vs2_nice_check(int p, int d, const std::vector<std::int64_t>& alphas) {
  if (d < 1) fail(ErrorCode::BadParameters, "d must be >= 1");
  if (alphas.size() != static_cast<std::size_t>(d)) fail(ErrorCode::BadParameters, "need exactly d alphas");
  std::int64_t s = 0;
  for (auto a : alphas) s += a;
  return ((s % p) + p) % p != 1 % p;
}

/// {e_1, ..., e_d, sum alpha_i e_i} in F(p,d).
inline GroupSubset vs2_set(int p, int d, const std::vector<std::int64_t>& alphas) {
  if (alphas.size() != static_cast<std::size_t>(d)) fail(ErrorCode::BadParameters, "need exactly d alphas");
  const auto group = make_elementary(p, d);
  GroupSubset a(group);
  for (int i = 0; i < d; ++i) a.insert(unit_vector(*group, static_cast<std::size_t>(i)));
  a.insert(group->index(alphas));
  return a;
}

/// Brute-force side of vs2_nice_check: does some hA equal G?
inline bool vs2_bruteforce(int p, int d, const std::vector<std::int64_t>& alphas) {
  return order_profile(vs2_set(p, d, alphas)).niceOrder.has_value();
}

// ---------------------------------------------------------------------------
// Witnesses for the quadratic lower bound on X

struct WitnessRecord {
  std::map<std::string, std::int64_t> params;
  GroupSubset set;
  OrderProfile verifiedProfile;
  std::map<std::string, bool> extraChecks;
};

struct XLowerSearch {
  WitnessRecord record;
  std::vector<std::pair<Elem, Elem>> allWitnesses;  // filled when requested
};

/// Exhaustive scan of 2-element subsets {a < b} of Z/g, g = floor(h(h+4)/3) + 1,
/// k = g - 1, in lexicographic order, for A with A u ... u hA = Z/g,
/// (k-1)A != Z/g and kA = Z/g.
inline XLowerSearch search_x_lower_witness(int h, unsigned threads = 1, bool collectAll = false,
                                           std::uint64_t cap = kDefaultOrderCap) {
  if (h < 1) fail(ErrorCode::BadParameters, "h must be >= 1");
  const std::int64_t g = static_cast<std::int64_t>(x_lower_value(static_cast<std::uint64_t>(h))) + 1;
  const std::int64_t k = g - 1;
  const auto group = make_group({g}, cap);
  auto satisfies = [&](Elem a, Elem b) {
    const auto set = GroupSubset::of(group, {a, b});
    if (!weak_union(set, static_cast<std::uint64_t>(h)).is_full()) return false;
    GroupSubset cur = set;
    for (std::int64_t i = 2; i < k; ++i) cur = sumset(cur, set);
    if (k == 1 ? zero_fold(group).is_full() : cur.is_full()) return false;
    cur = k == 1 ? set : sumset(cur, set);
    return cur.is_full();
  };
  std::vector<std::vector<std::pair<Elem, Elem>>> found(kDefaultShards);
  parallel_shards(static_cast<std::size_t>(g), threads, kDefaultShards,
                  [&](std::size_t s, std::size_t lo, std::size_t hi) {
                    for (std::size_t a = lo; a < hi; ++a) {
                      for (std::size_t b = a + 1; b < static_cast<std::size_t>(g); ++b) {
                        if (!satisfies(static_cast<Elem>(a), static_cast<Elem>(b))) continue;
                        found[s].emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
                        if (!collectAll) return;
                      }
                    }
                  });
  XLowerSearch out;
  for (auto& f : found) out.allWitnesses.insert(out.allWitnesses.end(), f.begin(), f.end());
  if (out.allWitnesses.empty())
    fail(ErrorCode::NoWitnessFound, "no 2-element witness in Z/" + std::to_string(g) + " for h = " + std::to_string(h));
  const auto [a, b] = out.allWitnesses.front();
  if (!collectAll) out.allWitnesses.resize(1);
  auto& rec = out.record;
  rec.params = {{"h", h}, {"g", g}, {"k", k}};
  rec.set = GroupSubset::of(group, {a, b});
  rec.verifiedProfile = order_profile(rec.set);
  rec.extraChecks = {{"weakCoversAtH", true}, {"kMinusOneFails", true}, {"kCovers", true}};
  return out;
}

}  // namespace addbase
