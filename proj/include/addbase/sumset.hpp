#pragma once

#include <cstddef>
#include <cstdint>
#include <list>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "addbase/subgroup.hpp"
#include "addbase/subset.hpp"

namespace addbase {

/// Basis diagnostics of one subset.
struct OrderProfile {
  bool generatesByDifferences = false;  // <A - A> = G
  std::optional<int> niceOrder;         // least h >= 1 with hA = G
  std::optional<int> weakNiceOrder;     // least h with A u 2A u ... u hA = G
  int stabilization = 1;                // least h at which hA has entered its eventual cycle

  friend bool operator==(const OrderProfile&, const OrderProfile&) = default;
};

/// Sub-range [loIndex, hiIndex] of a truncation model in which coverage is checked.
struct TruncationWindow {
  std::size_t loIndex = 0;
  std::size_t hiIndex = 0;

  static TruncationWindow full(const FiniteAbelianGroup& g) { return {0, g.order() - 1}; }
};

/// A + B. The smaller side supplies the translations; cyclic groups use word rotation.
inline GroupSubset sumset(const GroupSubset& a, const GroupSubset& b) {
  a.check_same(b);
  const auto& g = a.group();
  GroupSubset out(a.group_ptr());
  if (a.is_empty() || b.is_empty()) return out;
  const bool a_small = a.size() <= b.size();
  const GroupSubset& outer = a_small ? a : b;
  const GroupSubset& inner = a_small ? b : a;
  const std::size_t n = g.order();
  if (!g.is_quotient() && g.rank() == 1) {
    auto& dst = out.mask();
    outer.mask().for_each([&](std::size_t shift) {
      if (dst.all()) return;
      dst.or_rotated(inner.mask(), shift);
    });
    return out;
  }
  const auto inner_elems = inner.elements();
  std::size_t filled = 0;
  outer.mask().for_each([&](std::size_t x) {
    if (filled == n) return;
    for (Elem y : inner_elems) {
      const Elem s = g.add(static_cast<Elem>(x), y);
      if (!out.contains(s)) {
        out.insert(s);
        ++filled;
      }
    }
  });
  return out;
}

/// {0}, the empty sum.
inline GroupSubset zero_fold(const GroupPtr& group) { return GroupSubset::of(group, {group->zero()}); }

namespace detail {

inline GroupSubset fold_by_doubling(const GroupSubset& a, std::uint64_t h) {
  // binary powers: result = sum of the 2^i-fold sumsets selected by the bits of h
  std::optional<GroupSubset> result;
  GroupSubset power = a;
  while (true) {
    if (h & 1u) result = result ? sumset(*result, power) : power;
    h >>= 1;
    if (!h) break;
    power = sumset(power, power);
  }
  return *result;
}

}  // namespace detail

/// hA for h >= 1.
inline GroupSubset fold_sumset(const GroupSubset& a, std::uint64_t h) {
  if (h == 0) fail(ErrorCode::BadParameters, "fold_sumset needs h >= 1");
  if (a.is_empty()) return a;
  return detail::fold_by_doubling(a, h);
}

/// Memo of h-fold sumsets keyed by (set, h), LRU-evicted once `capacity` entries are held.
/// Lookups and inserts are serialized, so concurrent callers see atomic operations.
class SumsetCache {
 public:
  explicit SumsetCache(std::size_t capacity = 256) : capacity_(capacity) {}

  GroupSubset fold(const GroupSubset& a, std::uint64_t h) {
    if (h == 0) fail(ErrorCode::BadParameters, "fold_sumset needs h >= 1");
    if (h == 1 || a.is_empty()) return a;
    if (auto hit = lookup(a, h)) return *hit;
    // reuse the largest cached power below h when there is one
    GroupSubset result = a;
    std::uint64_t have = 1;
    for (std::uint64_t k = h - 1; k >= 2; --k) {
      if (auto hit = lookup(a, k)) {
        result = *hit;
        have = k;
        break;
      }
      if (h - k > 64) break;
    }
    if (h - have > 1) {
      result = sumset(result, detail::fold_by_doubling(a, h - have));
    } else if (h - have == 1) {
      result = sumset(result, a);
    }
    store(a, h, result);
    return result;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return lru_.size();
  }
  std::size_t hits() const {
    std::lock_guard<std::mutex> lock(mu_);
    return hits_;
  }

 private:
  struct Entry {
    GroupSubset key;
    std::uint64_t h;
    GroupSubset value;
  };
  using List = std::list<Entry>;

  static std::size_t key_hash(const GroupSubset& a, std::uint64_t h) {
    return a.mask().hash() ^ (std::hash<std::uint64_t>{}(h) * 0x9e3779b97f4a7c15ull);
  }

  std::optional<GroupSubset> lookup(const GroupSubset& a, std::uint64_t h) {
    std::lock_guard<std::mutex> lock(mu_);
    auto range = index_.equal_range(key_hash(a, h));
    for (auto it = range.first; it != range.second; ++it) {
      if (it->second->h == h && it->second->key == a) {
        lru_.splice(lru_.begin(), lru_, it->second);
        ++hits_;
        return it->second->value;
      }
    }
    return std::nullopt;
  }

  void store(const GroupSubset& a, std::uint64_t h, const GroupSubset& value) {
    std::lock_guard<std::mutex> lock(mu_);
    const auto kh = key_hash(a, h);
    auto range = index_.equal_range(kh);
    for (auto it = range.first; it != range.second; ++it)
      if (it->second->h == h && it->second->key == a) return;
    lru_.push_front(Entry{a, h, value});
    index_.emplace(kh, lru_.begin());
    while (lru_.size() > capacity_) {
      auto last = std::prev(lru_.end());
      auto r = index_.equal_range(key_hash(last->key, last->h));
      for (auto it = r.first; it != r.second; ++it)
        if (it->second == last) {
          index_.erase(it);
          break;
        }
      lru_.pop_back();
    }
  }

  std::size_t capacity_;
  mutable std::mutex mu_;
  List lru_;
  std::unordered_multimap<std::size_t, List::iterator> index_;
  std::size_t hits_ = 0;
};

inline GroupSubset fold_sumset(const GroupSubset& a, std::uint64_t h, SumsetCache& cache) { return cache.fold(a, h); }

/// A u 2A u ... u hA.
inline GroupSubset weak_union(const GroupSubset& a, std::uint64_t h) {
  if (h == 0) fail(ErrorCode::BadParameters, "weak_union needs h >= 1");
  GroupSubset acc = a;
  GroupSubset cur = a;
  for (std::uint64_t i = 2; i <= h && !acc.is_full(); ++i) {
    cur = sumset(cur, a);
    acc |= cur;
  }
  return acc;
}

/// <A - A>, generated by {a - a0 : a in A} for any fixed a0 in A.
inline SubgroupHandle difference_closure(const GroupSubset& a) {
  if (a.is_empty()) fail(ErrorCode::EmptySet, "difference closure of the empty set");
  const auto& g = a.group();
  const Elem a0 = a.first();
  return subgroup_closure(a.translate(g.neg(a0)));
}

/// Iterates hA. With a in A, hA = ha + h(A - a) and h(A - a) is a strictly
/// increasing chain until it equals H = <A - A>, so |hA| = |H| marks entry into
/// the eventual cycle; from there hA walks the cosets of H with period ord(a + H).
inline OrderProfile order_profile(const GroupSubset& a) {
  if (a.is_empty()) fail(ErrorCode::EmptySet, "order_profile of the empty set");
  const auto diff = difference_closure(a);
  const std::size_t target = diff.size();
  OrderProfile p;
  p.generatesByDifferences = diff.is_whole_group();

  GroupSubset cur = a;
  GroupSubset acc = a;
  int h = 1;
  auto note = [&] {
    if (!p.niceOrder && cur.is_full()) p.niceOrder = h;
    if (!p.weakNiceOrder && acc.is_full()) p.weakNiceOrder = h;
  };
  note();
  while (cur.size() < target) {
    cur = sumset(cur, a);
    acc |= cur;
    ++h;
    note();
  }
  p.stabilization = h;
  if (p.weakNiceOrder) return p;
  // walk one full period of the coset cycle to settle the weak order
  const Elem step = a.first();
  const Elem start_coset = diff.coset_of(cur.first());
  for (std::size_t i = 0; i < diff.coset_count(); ++i) {
    cur = cur.translate(step);
    ++h;
    acc |= cur;
    note();
    if (p.weakNiceOrder || diff.coset_of(cur.first()) == start_coset) break;
  }
  return p;
}

/// Full preimage {x in G : proj(x) in Aq}.
inline GroupSubset lift_set(const GroupSubset& aq, const QuotientView& view) {
  if (!aq.group().same_as(*view.quotient)) fail(ErrorCode::QuotientMismatch, "set does not live over this quotient");
  GroupSubset b(view.parent);
  for (Elem x = 0; x < view.parent->order(); ++x)
    if (aq.contains(view.projection[x])) b.insert(x);
  return b;
}

struct IntersectionChainResult {
  bool holds = false;
  std::optional<Elem> witness;  // least c in nA n (n+m)A
};

/// Finds c in nA n (n+m)A and checks kc in (kn + im)A for 0 <= i <= k.
inline IntersectionChainResult intersection_chain_check(const GroupSubset& a, std::uint64_t n, std::uint64_t m,
                                                        std::uint64_t k) {
  if (n == 0 || m == 0 || k == 0) fail(ErrorCode::BadParameters, "n, m, k must be >= 1");
  if (a.is_empty()) return {};
  GroupSubset both = fold_sumset(a, n);
  both &= fold_sumset(a, n + m);
  if (both.is_empty()) return {};
  IntersectionChainResult r;
  r.witness = both.first();
  const Elem kc = a.group().multiple(k, *r.witness);
  r.holds = true;
  for (std::uint64_t i = 0; i <= k && r.holds; ++i) r.holds = fold_sumset(a, k * n + i * m).contains(kc);
  return r;
}

/// True iff every element with index in the window lies in hA.
inline bool windowed_covers(const GroupSubset& a, std::uint64_t h, const TruncationWindow& w) {
  if (w.loIndex > w.hiIndex || w.hiIndex >= a.group().order())
    fail(ErrorCode::BadWindow, "window [" + std::to_string(w.loIndex) + "," + std::to_string(w.hiIndex) +
                                   "] invalid for group of order " + std::to_string(a.group().order()));
  const auto ha = fold_sumset(a, h);
  for (std::size_t x = w.loIndex; x <= w.hiIndex; ++x)
    if (!ha.contains(static_cast<Elem>(x))) return false;
  return true;
}

}  // namespace addbase
