#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace addbase;

namespace {

GroupSubset z(int n, std::initializer_list<Elem> xs) { return GroupSubset::of(make_group({n}), xs); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::VerificationFailed;
}

// Exceptional by definition: no power of A \ {a} is G. Iterates up to |G|^2 folds.
bool exceptional_by_iteration(const GroupSubset& a, Elem x) {
  const auto rest = a.without(x);
  if (rest.is_empty()) return true;
  const auto n = rest.group().order();
  GroupSubset cur = rest;
  for (std::size_t h = 1; h <= n * n; ++h) {
    if (cur.is_full()) return false;
    cur = sumset(cur, rest);
  }
  return true;
}

}  // namespace

TEST(Basis, Examples) {
  EXPECT_TRUE(is_basis(z(5, {2, 3})));
  EXPECT_FALSE(is_basis(z(4, {0, 2})));
  EXPECT_FALSE(is_basis(z(7, {3})));
  EXPECT_EQ(code_of([] { is_basis(z(4, {})); }), ErrorCode::EmptySet);
}

TEST(BasisProperty, CriterionMatchesIterationOnProducts) {
  ref::Gen gen(41);
  for (int round = 0; round < 150; ++round) {
    const auto mods = gen.moduli(3, 30);
    auto g = make_group(mods);
    auto a = gen.subset(g, 0.12);
    const auto p = ref::profile(ref::to_tuples(a), mods);
    EXPECT_EQ(is_basis(a), p.nice.has_value()) << g->spec();
  }
}

TEST(Classify, Examples) {
  auto r = classify(z(4, {0, 1, 2}));
  EXPECT_EQ(r.exceptional(), std::vector<Elem>{1});
  EXPECT_EQ(r.exceptionalCount, 1u);
  EXPECT_EQ(r.profile.niceOrder, 2);
  EXPECT_EQ(code_of([] { classify(z(5, {1})); }), ErrorCode::NotABasis);
  EXPECT_EQ(code_of([] { classify(z(5, {0, 2, 4}).without(0).without(2).without(4)); }), ErrorCode::EmptySet);
  EXPECT_EQ(code_of([] { classify(z(4, {0, 2})); }), ErrorCode::NotABasis);
  auto two = classify(z(7, {0, 1}));
  EXPECT_EQ(two.exceptionalCount, 2u);
  EXPECT_EQ(two.profile.niceOrder, 6);
}

TEST(ClassifyProperty, VerdictsMatchDefinition) {
  ref::Gen gen(42);
  int seen = 0;
  for (int round = 0; round < 300 && seen < 80; ++round) {
    auto g = make_group(gen.moduli(2, 16));
    auto a = gen.subset(g, 0.2);
    if (a.size() < 2 || !is_basis(a)) continue;
    ++seen;
    const auto r = classify(a);
    const auto h = static_cast<std::uint64_t>(*r.profile.niceOrder);
    for (const auto& [x, v] : r.verdictPerElement) {
      EXPECT_EQ(v == Verdict::Exceptional, exceptional_by_iteration(a, x)) << g->spec();
      const bool shrinks = !fold_sumset(a.without(x), h).is_full();
      EXPECT_EQ(r.minimalAtOrder.at(x), shrinks);
    }
    EXPECT_EQ(r.exceptionalCount, r.exceptional().size());
  }
  EXPECT_GE(seen, 40);
}

TEST(EFunctional, Guard) {
  auto r = e_functional(make_group({6}), 1);
  EXPECT_TRUE(r.degenerateGuard);
  EXPECT_EQ(r.value, 0u);
}

TEST(EFunctional, SmallCyclic) {
  auto r5 = e_functional(make_group({5}), 2);
  EXPECT_LE(r5.value, 1u);
  EXPECT_GT(r5.examined, 0u);
  auto r8 = e_functional(make_group({8}), 3);
  EXPECT_LE(r8.value, 2u);
  ASSERT_TRUE(r8.witness);
  EXPECT_EQ(order_profile(*r8.witness).niceOrder, 3);
  EXPECT_EQ(count_exceptional(*r8.witness), r8.value);
}

TEST(EFunctional, DeterministicAcrossThreads) {
  auto g = make_group({2, 4});
  for (int h = 2; h <= 4; ++h) {
    auto a = e_functional(g, h, ExhaustiveFamily{}, kDefaultSubsetBudget, 1);
    auto b = e_functional(g, h, ExhaustiveFamily{}, kDefaultSubsetBudget, 7);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.examined, b.examined);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(EFunctional, BudgetAndFamily) {
  EXPECT_EQ(code_of([] { e_functional(make_group({13}), 2); }), ErrorCode::BudgetExceeded);
  auto g = make_group({7});
  std::vector<GroupSubset> fam{GroupSubset::of(g, {0, 1, 3, 5}), GroupSubset::of(g, {0, 1})};
  auto r = e_functional(g, 2, fam);
  EXPECT_EQ(r.examined, 1u);
  std::vector<GroupSubset> bad{GroupSubset::of(make_group({5}), {1, 2})};
  EXPECT_EQ(code_of([&] { e_functional(g, 2, bad); }), ErrorCode::GroupMismatch);
}

TEST(TorsionCover, Examples) {
  auto v = make_elementary(2, 2);
  auto a = GroupSubset::of(v, {v->index({1, 0}), v->index({0, 1}), v->index({1, 1})});
  auto r = torsion_cover_check(a, 2, 2);
  EXPECT_TRUE(r.covers);
  EXPECT_EQ(r.folds, 4u);
  auto w = make_elementary(3, 2);
  auto b = GroupSubset::of(w, {w->index({1, 0}), w->index({0, 1}), w->index({1, 1})});
  EXPECT_TRUE(torsion_cover_check(b, 3, 2).covers);
  EXPECT_EQ(code_of([&] { torsion_cover_check(b, 3, 1); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([&] { torsion_cover_check(b, 2, 2); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([&] { torsion_cover_check(GroupSubset::of(w, {0}), 3, 2); }), ErrorCode::PreconditionViolated);
}

TEST(Bounds, GeneralFormula) {
  EXPECT_EQ(bound_x_general(2, {{1, 1}, {2, 2}}), 7u);
  EXPECT_EQ(bound_x_general(1, {{1, 1}}), 1u);
  EXPECT_EQ(bound_x_general(3, {{1, 1}, {2, 2}, {3, 3}}), 14u);
  EXPECT_THROW(bound_x_general(2, {{1, 1}}), Error);
  EXPECT_THROW(bound_x_general(0, {}), Error);
}

TEST(Bounds, TorsionFormula) {
  auto b = bound_x_torsion(2, 5);
  EXPECT_EQ(b.upper, 11);
  EXPECT_EQ(b.lower, 7);
  auto c = bound_x_torsion(3, 3);
  EXPECT_EQ(c.upper, 11);
  EXPECT_EQ(c.lower, 0);
  auto d = bound_x_torsion(2, 2);
  EXPECT_EQ(d.upper, 5);
  EXPECT_EQ(d.lower, 1);
  EXPECT_FALSE(bound_x_torsion(5, 2).upper);
  EXPECT_FALSE(bound_x_torsion(5, 2).lower);
  EXPECT_THROW(bound_x_torsion(4, 5), Error);
}

TEST(Bounds, QuotientSizesAndReport) {
  auto g = make_group({2, 4});
  auto q = quotient_sizes(g, 3);
  EXPECT_EQ(q.at(1), 1u);
  EXPECT_EQ(q.at(2), 4u);
  EXPECT_EQ(q.at(3), 1u);
  auto r = bound_report(g, 3);
  EXPECT_EQ(r.generalUpper, 9u + 3u * 2u + 2u);
  EXPECT_FALSE(r.torsionUpper);
  EXPECT_EQ(r.xLower, 7u);
  auto t = bound_report(make_elementary(2, 3), 2);
  EXPECT_EQ(t.torsionUpper, 5);
  EXPECT_EQ(x_lower_value(2), 4u);
  EXPECT_EQ(x_lower_value(5), 15u);
}

TEST(BadElements, Examples) {
  auto g = make_group({5});
  auto r = bad_element_report(GroupSubset::full(g));
  EXPECT_EQ(r.badCount, 0u);
  for (const auto& [b, o] : r.orderWithout) EXPECT_LE(o.value(), 2);
  auto v = make_group({2});
  auto s = bad_element_report(GroupSubset::full(v));
  EXPECT_EQ(s.badCount, 2u);
  for (const auto& [b, o] : s.orderWithout) EXPECT_FALSE(o);
  EXPECT_EQ(code_of([] { bad_element_report(z(5, {2, 3})); }), ErrorCode::NotOrderTwo);
}
