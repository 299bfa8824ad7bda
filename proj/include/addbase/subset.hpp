#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "addbase/bitset.hpp"
#include "addbase/group.hpp"

namespace addbase {

/// A subset of a finite abelian group stored as a dense membership mask.
class GroupSubset {
 public:
  GroupSubset() = default;
  explicit GroupSubset(GroupPtr group) : group_(std::move(group)), mask_(group_->order()) {}
  GroupSubset(GroupPtr group, DenseBitset mask) : group_(std::move(group)), mask_(std::move(mask)) {}

  static GroupSubset empty(GroupPtr group) { return GroupSubset(std::move(group)); }
  static GroupSubset full(GroupPtr group) {
    GroupSubset s(std::move(group));
    s.mask_.set_all();
    return s;
  }
  static GroupSubset of(GroupPtr group, std::initializer_list<Elem> elems) {
    return of(std::move(group), std::vector<Elem>(elems));
  }
  static GroupSubset of(GroupPtr group, const std::vector<Elem>& elems) {
    GroupSubset s(std::move(group));
    for (Elem e : elems) {
      if (e >= s.group_->order())
        fail(ErrorCode::ParseError, "element index " + std::to_string(e) + " out of range for " + s.group_->spec());
      s.mask_.set(e);
    }
    return s;
  }
  /// Bit i of `bits` selects element i (groups of order <= 64).
  static GroupSubset from_mask(GroupPtr group, std::uint64_t bits) {
    GroupSubset s(std::move(group));
    for (std::size_t i = 0; i < s.group_->order() && i < 64; ++i)
      if ((bits >> i) & 1u) s.mask_.set(i);
    return s;
  }

  const GroupPtr& group_ptr() const noexcept { return group_; }
  const FiniteAbelianGroup& group() const noexcept { return *group_; }
  const DenseBitset& mask() const noexcept { return mask_; }
  DenseBitset& mask() noexcept { return mask_; }

  std::size_t size() const noexcept { return mask_.count(); }
  bool is_empty() const noexcept { return mask_.none(); }
  bool is_full() const noexcept { return mask_.all(); }
  bool contains(Elem x) const noexcept { return mask_.test(x); }
  void insert(Elem x) noexcept { mask_.set(x); }
  void erase(Elem x) noexcept { mask_.reset(x); }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(size());
    mask_.for_each([&](std::size_t i) { out.push_back(static_cast<Elem>(i)); });
    return out;
  }

  /// Least element, or order() for the empty set.
  Elem first() const noexcept { return static_cast<Elem>(mask_.first()); }

  std::uint64_t to_mask64() const noexcept { return mask_.words().empty() ? 0 : mask_.words()[0]; }

  GroupSubset without(Elem x) const {
    GroupSubset s = *this;
    s.erase(x);
    return s;
  }

  /// A + b
  GroupSubset translate(Elem b) const {
    GroupSubset s(group_);
    mask_.for_each([&](std::size_t a) { s.mask_.set(group_->add(static_cast<Elem>(a), b)); });
    return s;
  }

  /// -A
  GroupSubset negate() const {
    GroupSubset s(group_);
    mask_.for_each([&](std::size_t a) { s.mask_.set(group_->neg(static_cast<Elem>(a))); });
    return s;
  }

  GroupSubset& operator|=(const GroupSubset& o) {
    check_same(o);
    mask_ |= o.mask_;
    return *this;
  }
  GroupSubset& operator&=(const GroupSubset& o) {
    check_same(o);
    mask_ &= o.mask_;
    return *this;
  }

  bool same_group(const GroupSubset& o) const { return group_ && o.group_ && group_->same_as(*o.group_); }

  void check_same(const GroupSubset& o) const {
    if (!same_group(o))
      fail(ErrorCode::GroupMismatch, "subsets live over different groups (" + (group_ ? group_->spec() : "?") +
                                         " vs " + (o.group_ ? o.group_->spec() : "?") + ")");
  }

  friend bool operator==(const GroupSubset& a, const GroupSubset& b) {
    return a.same_group(b) && a.mask_ == b.mask_;
  }

 private:
  GroupPtr group_;
  DenseBitset mask_;
};

}  // namespace addbase
