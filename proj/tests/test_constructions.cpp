#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace addbase;

namespace {

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

}  // namespace

TEST(BalancedTernary, Examples) {
  EXPECT_TRUE(balanced_ternary(0).digits.empty());
  EXPECT_EQ(balanced_ternary(2).digits, (std::vector<int>{-1, 1}));
  EXPECT_EQ(balanced_ternary(5).digits, (std::vector<int>{-1, -1, 1}));
  EXPECT_EQ(balanced_ternary(-5).digits, (std::vector<int>{1, 1, -1}));
}

TEST(BalancedTernaryProperty, RoundtripAndUniqueness) {
  // every digit string of length <= 6 without trailing zero decodes to a distinct integer
  std::map<std::int64_t, std::vector<int>> seen;
  for (int len = 0; len <= 6; ++len) {
    std::vector<int> d(static_cast<std::size_t>(len), -1);
    while (true) {
      if (len == 0 || d.back() != 0) {
        std::int64_t v = 0;
        for (int i = len - 1; i >= 0; --i) v = 3 * v + d[static_cast<std::size_t>(i)];
        EXPECT_TRUE(seen.emplace(v, d).second) << v;
        EXPECT_EQ(balanced_ternary(v).digits, d);
      }
      int i = 0;
      while (i < len && d[static_cast<std::size_t>(i)] == 1) d[static_cast<std::size_t>(i++)] = -1;
      if (i == len) break;
      ++d[static_cast<std::size_t>(i)];
    }
  }
  EXPECT_EQ(seen.size(), 729u);
  ref::Gen gen(51);
  for (int i = 0; i < 2000; ++i) {
    const auto n = gen.uniform(-1'000'000'000, 1'000'000'000);
    EXPECT_EQ(balanced_ternary(n).value(), n);
  }
}

TEST(Minimal, ParameterGuards) {
  EXPECT_EQ(code_of([] { minimal_basis_model(2, 3, MinimalVariant::Ternary); }), ErrorCode::BadParameters);
  EXPECT_EQ(code_of([] { minimal_basis_model(4, 1, MinimalVariant::Chain2); }), ErrorCode::BadParameters);
}

TEST(Minimal, DirectSumDecompositionIsUnique) {
  for (auto v : {MinimalVariant::Ternary, MinimalVariant::Chain2}) {
    auto m = minimal_basis_model(4, 2, v);
    auto& dm = m.model;
    EXPECT_TRUE(dm.verify());
    // count representations by brute force over all choices of lambda_i
    std::map<Elem, int> reps;
    std::vector<std::vector<Elem>> lam;
    for (const auto& l : dm.lambdaSets) lam.push_back(l.elements());
    std::vector<std::size_t> pick(lam.size(), 0);
    while (true) {
      Elem s = 0;
      for (std::size_t i = 0; i < lam.size(); ++i) s = dm.group->add(s, lam[i][pick[i]]);
      ++reps[s];
      std::size_t i = 0;
      while (i < lam.size() && ++pick[i] == lam[i].size()) pick[i++] = 0;
      if (i == lam.size()) break;
    }
    EXPECT_EQ(reps.size(), dm.group->order());
    for (const auto& [x, c] : reps) EXPECT_EQ(c, 1);
  }
}

TEST(Minimal, EveryElementHasVerifiedWitness) {
  struct Case {
    MinimalVariant v;
    int K, h;
    std::size_t basis;
  };
  for (const auto& c : {Case{MinimalVariant::Ternary, 4, 2, 16}, Case{MinimalVariant::Ternary, 5, 3, 18},
                        Case{MinimalVariant::Chain2, 6, 2, 14}, Case{MinimalVariant::Chain2, 6, 3, 9}}) {
    auto m = minimal_basis_model(c.K, c.h, c.v);
    EXPECT_EQ(m.basis.size(), c.basis);
    EXPECT_TRUE(fold_sumset(m.basis, static_cast<std::uint64_t>(c.h)).is_full());
    const auto ws = minimality_witnesses(m, 4);
    ASSERT_EQ(ws.size(), m.basis.size());
    for (const auto& w : ws) {
      ASSERT_TRUE(w.witness);
      EXPECT_TRUE(fold_sumset(m.basis, static_cast<std::uint64_t>(c.h)).contains(*w.witness));
      EXPECT_FALSE(fold_sumset(m.basis.without(w.element), static_cast<std::uint64_t>(c.h)).contains(*w.witness));
    }
    const auto cov = interior_coverage(m);
    EXPECT_GT(cov.interior, 0u);
    EXPECT_EQ(cov.covered, cov.interior);
    EXPECT_FALSE(cov.firstMiss);
  }
}

TEST(Fpt, SmallExample) {
  auto ex = fpt_example(2, 3, 4);
  const auto& g = ex.set.group();
  std::set<std::string> labels;
  for (Elem e : ex.set.elements()) labels.insert(g.label(e));
  EXPECT_EQ(labels, (std::set<std::string>{"1", "t", "0", "t^2", "t^3", "t^2+t^3"}));
  auto r = classify(ex.set);
  EXPECT_EQ(r.profile.niceOrder, 3);
  EXPECT_EQ(r.exceptional(), ex.expectedExceptional);
  EXPECT_EQ(g.label(r.exceptional()[0]), "1");
  EXPECT_EQ(g.label(r.exceptional()[1]), "t");
}

TEST(Fpt, Parameters) {
  auto a = fpt_example(2, 4, 7);
  EXPECT_EQ(a.k, 3);
  EXPECT_EQ(classify(a.set).exceptionalCount, 3u);
  auto b = fpt_example(3, 3, 6);
  EXPECT_EQ(b.k, 1);
  EXPECT_EQ(b.r, 0);
  EXPECT_EQ(classify(b.set).exceptionalCount, 1u);
  auto c = fpt_example(3, 4, 6);
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.r, 1);
  auto rc = classify(c.set);
  EXPECT_EQ(rc.profile.niceOrder, 4);
  EXPECT_EQ(rc.exceptionalCount, 1u);
  EXPECT_EQ(code_of([] { fpt_example(2, 4, 4); }), ErrorCode::TruncationTooSmall);
  EXPECT_EQ(code_of([] { fpt_example(4, 3, 6); }), ErrorCode::BadParameters);
}

TEST(Vsd, Examples) {
  auto a = vsd_basis(3, 2);
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(fold_sumset(a, 4).is_full());
  EXPECT_FALSE(fold_sumset(a, 3).is_full());
  EXPECT_TRUE(sums_of_at_most(a, 3).is_full());
  auto b = vsd_basis(2, 2);
  EXPECT_TRUE(fold_sumset(b, 2).is_full());
  EXPECT_FALSE(b.is_full());
  EXPECT_EQ(code_of([] { vsd_basis(3, 4); }), ErrorCode::DegenerateD);
  for (auto [p, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 2}, {3, 3}, {5, 2}})
    EXPECT_TRUE(vs3_checks(p, d).all()) << p << "," << d;
}

TEST(Vs2, Examples) {
  EXPECT_TRUE(vs2_nice_check(3, 2, {1, 1}));
  EXPECT_TRUE(vs2_bruteforce(3, 2, {1, 1}));
  EXPECT_FALSE(vs2_nice_check(3, 2, {1, 0}));
  EXPECT_FALSE(vs2_nice_check(2, 3, {1, 1, 1}));
  EXPECT_THROW(vs2_nice_check(3, 2, {1}), Error);
}

TEST(Vs2Property, CriterionMatchesBruteForce) {
  for (auto [p, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
    std::vector<std::int64_t> alphas(static_cast<std::size_t>(d), 0);
    while (true) {
      EXPECT_EQ(vs2_nice_check(p, d, alphas), vs2_bruteforce(p, d, alphas));
      std::size_t i = 0;
      while (i < alphas.size() && ++alphas[i] == p) alphas[i++] = 0;
      if (i == alphas.size()) break;
    }
  }
}

TEST(XLower, Witnesses) {
  const std::map<int, std::pair<Elem, Elem>> first{{1, {0, 1}}, {2, {1, 4}}, {3, {1, 6}}, {4, {1, 5}}, {5, {1, 10}}};
  for (const auto& [h, pair] : first) {
    const auto s = search_x_lower_witness(h);
    const auto g = static_cast<std::int64_t>(h * (h + 4) / 3 + 1);
    EXPECT_EQ(s.record.params.at("g"), g);
    EXPECT_EQ(s.allWitnesses.front(), pair);
    EXPECT_EQ(s.record.verifiedProfile.niceOrder, g - 1);
    EXPECT_LE(s.record.verifiedProfile.weakNiceOrder.value(), h);
  }
  const auto all = search_x_lower_witness(2, 3, true);
  EXPECT_EQ(all.allWitnesses, (std::vector<std::pair<Elem, Elem>>{{1, 4}, {2, 3}}));
}

TEST(XLowerProperty, AllWitnessesSatisfyDefinition) {
  for (int h = 2; h <= 4; ++h) {
    const auto s = search_x_lower_witness(h, 2, true);
    const auto g = make_group({static_cast<std::int64_t>(s.record.params.at("g"))});
    for (auto [a, b] : s.allWitnesses) {
      const std::vector<int> elems{static_cast<int>(a), static_cast<int>(b)};
      const int n = static_cast<int>(g->order());
      EXPECT_EQ(addbase::oracle::naive_nice_order(elems, n, 2 * n), n - 1);
      EXPECT_LE(addbase::oracle::naive_weak_order(elems, n, 2 * n), h);
    }
  }
}
