#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "addbase/error.hpp"

namespace addbase {

/// Dense element label in 0 .. order-1.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 24;

/// Coordinates of an element; coords[i] lies in [0, moduli[i]).
struct GroupElement {
  std::vector<std::int64_t> coords;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

enum class LabelStyle { Plain, Polynomial };

class FiniteAbelianGroup;
using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

/// A finite abelian group, either an explicit product of cyclic groups with
/// mixed-radix labeling (last modulus varies fastest; polynomial groups put the
/// constant term fastest) or a coset-table quotient
/// of such a group. Immutable after construction.
class FiniteAbelianGroup {
 public:
  struct QuotientData {
    GroupPtr parent;
    std::vector<Elem> representatives;  // coset id -> least element of the coset
    std::vector<Elem> projection;       // parent element -> coset id
    std::vector<Elem> table;            // q*q addition table, empty when q is large
  };

  static GroupPtr product(std::vector<std::int64_t> moduli, std::string spec,
                          LabelStyle style = LabelStyle::Plain,
                          std::uint64_t cap = kDefaultOrderCap) {
    if (moduli.empty()) fail(ErrorCode::EmptyModuli, "a group needs at least one cyclic factor");
    std::uint64_t order = 1;
    for (auto n : moduli) {
      if (n < 2) fail(ErrorCode::InvalidModulus, "modulus " + std::to_string(n) + " is < 2");
      if (order > cap / static_cast<std::uint64_t>(n))
        fail(ErrorCode::OrderOverflow, "group order exceeds cap " + std::to_string(cap));
      order *= static_cast<std::uint64_t>(n);
    }
    auto g = std::shared_ptr<FiniteAbelianGroup>(new FiniteAbelianGroup());
    g->moduli_ = std::move(moduli);
    g->order_ = static_cast<std::size_t>(order);
    g->spec_ = std::move(spec);
    g->style_ = style;
    const std::size_t k = g->moduli_.size();
    g->strides_.assign(k, 1);
    if (style == LabelStyle::Polynomial) {
      // index = value of the polynomial at t = p
      for (std::size_t i = 1; i < k; ++i)
        g->strides_[i] = g->strides_[i - 1] * static_cast<std::size_t>(g->moduli_[i - 1]);
    } else {
      for (std::size_t i = k - 1; i-- > 0;)
        g->strides_[i] = g->strides_[i + 1] * static_cast<std::size_t>(g->moduli_[i + 1]);
    }
    if (k > 1) {
      g->digits_.resize(g->order_ * k);
      for (std::size_t x = 0; x < g->order_; ++x)
        for (std::size_t i = 0; i < k; ++i)
          g->digits_[x * k + i] =
              static_cast<std::uint32_t>((x / g->strides_[i]) % static_cast<std::size_t>(g->moduli_[i]));
    }
    return g;
  }

  static GroupPtr quotient(QuotientData data, std::string spec) {
    auto g = std::shared_ptr<FiniteAbelianGroup>(new FiniteAbelianGroup());
    const std::size_t q = data.representatives.size();
    g->order_ = q;
    g->moduli_ = {static_cast<std::int64_t>(q)};
    g->strides_ = {1};
    g->spec_ = std::move(spec);
    if (q <= 2048) {
      data.table.resize(q * q);
      for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
          data.table[a * q + b] = data.projection[data.parent->add(data.representatives[a], data.representatives[b])];
    }
    g->quotient_ = std::make_shared<QuotientData>(std::move(data));
    return g;
  }

  std::size_t order() const noexcept { return order_; }
  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  const std::string& spec() const noexcept { return spec_; }
  LabelStyle label_style() const noexcept { return style_; }
  bool is_quotient() const noexcept { return quotient_ != nullptr; }
  const QuotientData* quotient_data() const noexcept { return quotient_.get(); }

  Elem zero() const noexcept { return 0; }

  Elem add(Elem a, Elem b) const noexcept {
    if (quotient_) {
      if (!quotient_->table.empty()) return quotient_->table[a * order_ + b];
      const auto& qd = *quotient_;
      return qd.projection[qd.parent->add(qd.representatives[a], qd.representatives[b])];
    }
    const std::size_t k = moduli_.size();
    if (k == 1) {
      const std::size_t s = std::size_t{a} + b;
      return static_cast<Elem>(s >= order_ ? s - order_ : s);
    }
    const std::uint32_t* da = &digits_[std::size_t{a} * k];
    const std::uint32_t* db = &digits_[std::size_t{b} * k];
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t d = da[i] + db[i];
      if (d >= static_cast<std::uint32_t>(moduli_[i])) d -= static_cast<std::uint32_t>(moduli_[i]);
      idx += d * strides_[i];
    }
    return static_cast<Elem>(idx);
  }

  Elem neg(Elem a) const noexcept {
    if (quotient_) {
      const auto& qd = *quotient_;
      return qd.projection[qd.parent->neg(qd.representatives[a])];
    }
    const std::size_t k = moduli_.size();
    if (k == 1) return a == 0 ? 0 : static_cast<Elem>(order_ - a);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t d = digits_[std::size_t{a} * k + i];
      idx += (d == 0 ? 0 : static_cast<std::size_t>(moduli_[i]) - d) * strides_[i];
    }
    return static_cast<Elem>(idx);
  }

  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  /// m * a for a nonnegative integer m (double-and-add).
  Elem multiple(std::uint64_t m, Elem a) const noexcept {
    Elem acc = 0;
    Elem base = a;
    while (m) {
      if (m & 1u) acc = add(acc, base);
      base = add(base, base);
      m >>= 1;
    }
    return acc;
  }

  std::vector<std::int64_t> coords(Elem x) const {
    const std::size_t k = moduli_.size();
    std::vector<std::int64_t> c(k);
    for (std::size_t i = 0; i < k; ++i)
      c[i] = static_cast<std::int64_t>((std::size_t{x} / strides_[i]) % static_cast<std::size_t>(moduli_[i]));
    return c;
  }

  GroupElement element(Elem x) const { return GroupElement{coords(x)}; }

  /// Index of the element with the given coordinates; coordinates are reduced mod each modulus.
  Elem index(const std::vector<std::int64_t>& c) const {
    if (c.size() != moduli_.size())
      fail(ErrorCode::ParseError, "element has " + std::to_string(c.size()) + " coordinates, group " +
                                      spec_ + " has rank " + std::to_string(moduli_.size()));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::int64_t r = c[i] % moduli_[i];
      if (r < 0) r += moduli_[i];
      idx += static_cast<std::size_t>(r) * strides_[i];
    }
    return static_cast<Elem>(idx);
  }
  Elem index(const GroupElement& e) const { return index(e.coords); }

  /// Least common multiple of the element orders.
  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    if (quotient_) {
      for (Elem x = 0; x < order_; ++x) e = std::lcm(e, element_order(x));
      return e;
    }
    for (auto n : moduli_) e = std::lcm(e, static_cast<std::uint64_t>(n));
    return e;
  }

  std::uint64_t element_order(Elem x) const {
    std::uint64_t k = 1;
    Elem y = x;
    while (y != 0) {
      y = add(y, x);
      ++k;
    }
    return k;
  }

  bool is_m_torsion(std::uint64_t m) const { return m != 0 && m % exponent() == 0; }

  /// Human label: "1+t^2" style for polynomial groups, "(a,b)" otherwise.
  std::string label(Elem x) const {
    const auto c = coords(x);
    if (style_ == LabelStyle::Polynomial) {
      std::string s;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        if (c[i] != 1 || i == 0) s += std::to_string(c[i]);
        s += mono;
      }
      return s.empty() ? "0" : s;
    }
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }

  /// Same underlying group: identical product moduli, or the same quotient of the same parent.
  bool same_as(const FiniteAbelianGroup& o) const {
    if (this == &o) return true;
    if (is_quotient() != o.is_quotient()) return false;
    if (!is_quotient()) return moduli_ == o.moduli_;
    return quotient_->parent->same_as(*o.quotient_->parent) && quotient_->projection == o.quotient_->projection;
  }

 private:
  FiniteAbelianGroup() = default;

  std::vector<std::int64_t> moduli_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint32_t> digits_;
  std::size_t order_ = 0;
  std::string spec_;
  LabelStyle style_ = LabelStyle::Plain;
  std::shared_ptr<const QuotientData> quotient_;
};

inline std::string cyclic_spec(const std::vector<std::int64_t>& moduli) {
  std::string s = "C(";
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(moduli[i]);
  }
  return s + ")";
}

/// Product of cyclic groups Z/n1 x ... x Z/nk.
inline GroupPtr make_group(std::vector<std::int64_t> moduli, std::uint64_t cap = kDefaultOrderCap) {
  if (moduli.empty()) fail(ErrorCode::EmptyModuli, "a group needs at least one cyclic factor");
  auto spec = cyclic_spec(moduli);
  return FiniteAbelianGroup::product(std::move(moduli), std::move(spec), LabelStyle::Plain, cap);
}

}  // namespace addbase
