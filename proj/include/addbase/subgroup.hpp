#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addbase/subset.hpp"

namespace addbase {

/// A subset verified to be a subgroup, with its coset labeling.
/// Coset ids are assigned in order of the least element of each coset, so the
/// subgroup itself is coset 0.
class SubgroupHandle {
 public:
  /// Verifies closure (0 in S, S + S = S) and builds the coset index.
  static SubgroupHandle from_carrier(GroupSubset carrier) {
    const auto& g = carrier.group();
    if (carrier.is_empty() || !carrier.contains(g.zero()))
      fail(ErrorCode::NotASubgroup, "carrier does not contain 0");
    const auto elems = carrier.elements();
    for (Elem a : elems) {
      if (!carrier.contains(g.neg(a))) fail(ErrorCode::NotASubgroup, "carrier not closed under negation");
      for (Elem b : elems)
        if (!carrier.contains(g.add(a, b))) fail(ErrorCode::NotASubgroup, "carrier not closed under addition");
    }
    return SubgroupHandle(std::move(carrier), elems);
  }

  const GroupSubset& carrier() const noexcept { return carrier_; }
  const FiniteAbelianGroup& group() const noexcept { return carrier_.group(); }
  const GroupPtr& group_ptr() const noexcept { return carrier_.group_ptr(); }
  std::size_t size() const noexcept { return size_; }
  std::size_t coset_count() const noexcept { return coset_count_; }
  Elem coset_of(Elem x) const noexcept { return coset_index_[x]; }
  const std::vector<Elem>& coset_index() const noexcept { return coset_index_; }
  /// Least element of each coset, indexed by coset id.
  const std::vector<Elem>& representatives() const noexcept { return representatives_; }
  bool is_whole_group() const noexcept { return coset_count_ == 1; }

 private:
  friend SubgroupHandle subgroup_closure(const GroupSubset&);
  friend SubgroupHandle m_multiple_subgroup(const GroupPtr&, std::uint64_t);

  struct Trusted {};
  SubgroupHandle(Trusted, GroupSubset carrier) : carrier_(std::move(carrier)) { index(carrier_.elements()); }
  SubgroupHandle(GroupSubset carrier, const std::vector<Elem>& elems) : carrier_(std::move(carrier)) { index(elems); }

  void index(const std::vector<Elem>& elems) {
    const auto& g = carrier_.group();
    constexpr Elem kUnset = ~Elem{0};
    coset_index_.assign(g.order(), kUnset);
    size_ = elems.size();
    Elem next = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      if (coset_index_[x] != kUnset) continue;
      representatives_.push_back(x);
      for (Elem h : elems) coset_index_[g.add(x, h)] = next;
      ++next;
    }
    coset_count_ = next;
  }

  GroupSubset carrier_;
  std::vector<Elem> coset_index_;
  std::vector<Elem> representatives_;
  std::size_t size_ = 0;
  std::size_t coset_count_ = 0;
};

/// Smallest subgroup containing S. Grows H one generator at a time:
/// H <- union of H + j*g until the multiples of g fall back into H.
inline SubgroupHandle subgroup_closure(const GroupSubset& s) {
  if (s.is_empty()) fail(ErrorCode::EmptySet, "subgroup_closure of the empty set");
  const auto& g = s.group();
  GroupSubset h(s.group_ptr());
  h.insert(g.zero());
  std::vector<Elem> members{g.zero()};
  s.mask().for_each([&](std::size_t gi) {
    const Elem gen = static_cast<Elem>(gi);
    if (h.contains(gen)) return;
    const std::size_t base = members.size();
    Elem shift = gen;
    while (!h.contains(shift)) {
      for (std::size_t i = 0; i < base; ++i) {
        const Elem y = g.add(members[i], shift);
        h.insert(y);
        members.push_back(y);
      }
      shift = g.add(shift, gen);
    }
  });
  return SubgroupHandle(SubgroupHandle::Trusted{}, std::move(h));
}

/// m*G = {m x : x in G}.
inline SubgroupHandle m_multiple_subgroup(const GroupPtr& group, std::uint64_t m) {
  if (m == 0) fail(ErrorCode::BadParameters, "m must be >= 1");
  GroupSubset h(group);
  for (Elem x = 0; x < group->order(); ++x) h.insert(group->multiple(m, x));
  return SubgroupHandle(SubgroupHandle::Trusted{}, std::move(h));
}

/// A coset-table quotient G/H together with the projection G -> G/H.
struct QuotientView {
  GroupPtr parent;
  GroupPtr quotient;
  std::vector<Elem> projection;

  Elem project(Elem x) const noexcept { return projection[x]; }
};

inline QuotientView quotient_view(const GroupPtr& group, const SubgroupHandle& h) {
  if (!h.group().same_as(*group)) fail(ErrorCode::NotASubgroup, "subgroup belongs to a different group");
  FiniteAbelianGroup::QuotientData data;
  data.parent = group;
  data.representatives = h.representatives();
  data.projection = h.coset_index();
  std::string spec = group->spec() + "/H[" + std::to_string(h.size()) + "]";
  auto q = FiniteAbelianGroup::quotient(std::move(data), std::move(spec));
  return QuotientView{group, q, h.coset_index()};
}

/// A transversal of G/H containing 0 and closed under negation. Cosets are
/// processed in id order; a coset B paired with -B gets its least element and
/// its negation, a self-negating coset needs an element with 2x = 0.
inline GroupSubset symmetric_transversal(const GroupPtr& group, const SubgroupHandle& h) {
  if (!h.group().same_as(*group)) fail(ErrorCode::NotASubgroup, "subgroup belongs to a different group");
  const auto& g = *group;
  GroupSubset lambda(group);
  std::vector<bool> done(h.coset_count(), false);
  for (Elem c = 0; c < h.coset_count(); ++c) {
    if (done[c]) continue;
    const Elem rep = h.representatives()[c];
    const Elem negc = h.coset_of(g.neg(rep));
    if (negc != c) {
      lambda.insert(rep);
      lambda.insert(g.neg(rep));
      done[c] = done[negc] = true;
      continue;
    }
    bool found = false;
    for (Elem x = rep; x < g.order(); ++x) {
      if (h.coset_of(x) == c && g.add(x, x) == g.zero()) {
        lambda.insert(x);
        found = true;
        break;
      }
    }
    if (!found)
      fail(ErrorCode::NoSymmetricTransversal,
           "coset of " + g.label(rep) + " equals its negative but contains no element of order <= 2");
    done[c] = true;
  }
  return lambda;
}

}  // namespace addbase
