#include <gtest/gtest.h>

#include <set>

#include "bruhatkit/errors.hpp"
#include "bruhatkit/weyl.hpp"
#include "oracles.hpp"

using namespace bruhatkit;

namespace {

const std::vector<std::string> kTypes{"A1", "A2", "A3", "B2", "B3", "C3", "G2", "B4", "D4"};

int count_inversions(const RootSystem& rs, const WeylElement& w) {
  int n = 0;
  for (RootId b = 0; b < rs.num_positive(); ++b)
    if (!rs.is_positive(act(w, b))) ++n;
  return n;
}

}  // namespace

TEST(Weyl, OrdersMatchFormulaAndOrbitOracle) {
  for (const auto& label : kTypes) {
    const auto c = CartanMatrix::from_label(label);
    const auto rs = build_root_system(c);
    const auto g = WeylGroup::enumerate(rs);
    EXPECT_EQ(g.size(), oracle::weyl_order_formula(label)) << label;
    EXPECT_EQ(g.size(), oracle::weyl_order_by_orbit(c.entries())) << label;
    std::set<std::vector<RootId>> actions;
    for (const auto& w : g.elements()) actions.insert(w.action);
    EXPECT_EQ(actions.size(), g.size());
  }
}

TEST(Weyl, F4AndE6Orders) {
  for (const std::string label : {"F4", "E6"}) {
    const auto rs = build_root_system(CartanMatrix::from_label(label));
    EXPECT_EQ(WeylGroup::enumerate(rs).size(), oracle::weyl_order_formula(label)) << label;
  }
}

TEST(Weyl, ElementInvariants) {
  for (const auto& label : kTypes) {
    const auto rs = build_root_system(CartanMatrix::from_label(label));
    const auto g = WeylGroup::enumerate(rs);
    EXPECT_EQ(g[0].length(), 0);
    for (std::size_t k = 0; k < g.size(); ++k) {
      const auto& w = g[k];
      ASSERT_EQ(static_cast<int>(w.inversions.size()), w.length());
      ASSERT_EQ(count_inversions(rs, inverse(rs, w)), w.length());
      ASSERT_TRUE(rs.is_closed(w.inversions));
      ASSERT_EQ(from_word(rs, w.word).action, w.action);
      ASSERT_EQ(canonical_word(rs, w.action), w.word);
      ASSERT_EQ(g.index_of(w.inversions), std::optional<std::size_t>(k));
      if (k > 0) {
        const auto& prev = g[k - 1];
        ASSERT_TRUE(prev.length() < w.length() || (prev.length() == w.length() && prev.word < w.word));
      }
    }
    const auto& kappa = g[g.longest()];
    EXPECT_EQ(kappa.length(), rs.num_positive());
    EXPECT_EQ(g.longest(), g.size() - 1);
    EXPECT_EQ(g.inverse(g.longest()), g.longest());
  }
}

TEST(Weyl, CanonicalWordIsLexLeastReduced) {
  const auto rs = build_root_system(CartanMatrix::from_label("A3"));
  const auto g = WeylGroup::enumerate(rs);
  // brute force: all words of length l(w), lexicographically, first one that hits w
  for (const auto& w : g.elements()) {
    std::vector<int> word(static_cast<std::size_t>(w.length()), 0);
    std::vector<int> first;
    for (;;) {
      if (from_word(rs, word).action == w.action) {
        first = word;
        break;
      }
      int k = static_cast<int>(word.size()) - 1;
      while (k >= 0 && word[k] == rs.rank() - 1) word[k--] = 0;
      if (k < 0) break;
      ++word[k];
    }
    EXPECT_EQ(first, w.word);
  }
}

TEST(Weyl, GroupOperations) {
  const auto rs = build_root_system(CartanMatrix::from_label("B3"));
  const auto g = WeylGroup::enumerate(rs);
  for (std::size_t a = 0; a < g.size(); a += 5)
    for (std::size_t b = 0; b < g.size(); b += 7) {
      const auto ab = g.multiply(a, b);
      for (RootId x = 0; x < rs.num_roots(); ++x) ASSERT_EQ(act(g[ab], x), act(g[a], act(g[b], x)));
      ASSERT_EQ(g.multiply(a, g.inverse(a)), g.identity());
    }
  for (RootId beta = 0; beta < rs.num_roots(); ++beta) {
    const auto s = g.reflection(beta);
    EXPECT_EQ(g.multiply(s, s), g.identity());
    EXPECT_EQ(act(g[s], beta), rs.negate(beta));
  }
}

TEST(Weyl, CoweightAction) {
  const auto rs = build_root_system(CartanMatrix::from_label("G2"));
  const auto g = WeylGroup::enumerate(rs);
  const RationalVector x{Rational(1), Rational(-2)};
  for (const auto& w : g.elements()) {
    const auto wx = act_on_coweight(rs, w, x);
    // (w a)(w X) = a(X)
    for (RootId a = 0; a < rs.num_roots(); ++a)
      ASSERT_EQ(evaluate_on_coweight(rs, act(w, a), wx), evaluate_on_coweight(rs, a, x));
  }
}

TEST(Weyl, CapExceeded) {
  const auto rs = build_root_system(CartanMatrix::from_label("B3"));
  try {
    WeylGroup::enumerate(rs, 47);
    FAIL();
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), 47u);
  }
  EXPECT_EQ(WeylGroup::enumerate(rs, 48).size(), 48u);
}

TEST(Weyl, SerialAndParallelAgree) {
  for (const std::string label : {"B3", "D4", "F4"}) {
    const auto rs = build_root_system(CartanMatrix::from_label(label));
    const auto a = WeylGroup::enumerate(rs, kDefaultWeylCap, Exec::serial);
    const auto b = WeylGroup::enumerate(rs, kDefaultWeylCap, Exec::parallel);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      ASSERT_EQ(a[k].word, b[k].word);
      ASSERT_EQ(a[k].action, b[k].action);
    }
  }
}

TEST(Cosets, G2NonStandardLevi) {
  const auto rs = build_root_system(CartanMatrix::from_label("G2"));
  const auto g = WeylGroup::enumerate(rs);
  const RootId l[] = {3, rs.negate(3)};
  const auto cs = coset_sets(g, rs.make_set(l));
  EXPECT_EQ(cs.levi_group.size(), 2u);
  EXPECT_EQ(cs.minimal_reps.size(), 6u);
  EXPECT_EQ(cs.levi_group.size() * cs.minimal_reps.size(), g.size());
}

TEST(Cosets, RejectsBadLevi) {
  const auto rs = build_root_system(CartanMatrix::from_label("A2"));
  const auto g = WeylGroup::enumerate(rs);
  const RootId half[] = {0};
  EXPECT_THROW(coset_sets(g, rs.make_set(half)), ValidationError);
  const RootId open[] = {0, 1, rs.negate(0), rs.negate(1)};
  EXPECT_THROW(coset_sets(g, rs.make_set(open)), ValidationError);
}

TEST(Cosets, UniqueFactorizationByBruteForce) {
  for (const std::string label : {"A3", "B3", "G2"}) {
    const auto rs = build_root_system(CartanMatrix::from_label(label));
    const auto g = WeylGroup::enumerate(rs);
    for (int i = 0; i < rs.rank(); ++i) {
      const RootId l[] = {i, rs.negate(i)};
      const auto cs = coset_sets(g, rs.make_set(l));
      for (std::size_t w = 0; w < g.size(); ++w) {
        int hits = 0;
        for (auto tau : cs.levi_group)
          for (auto sigma : cs.minimal_reps)
            if (g.multiply(tau, sigma) == w) ++hits;
        ASSERT_EQ(hits, 1);
        const auto f = factorize(g, cs, w);
        ASSERT_EQ(g.multiply(f.tau, f.sigma), w);
        ASSERT_TRUE(cs.contains_minimal(f.sigma));
      }
    }
  }
}
