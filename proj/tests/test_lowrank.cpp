#include <gtest/gtest.h>

#include <set>

#include "bruhatkit/elliptic.hpp"
#include "bruhatkit/lowrank.hpp"
#include "bruhatkit/realform.hpp"
#include "oracles.hpp"

using namespace bruhatkit;
using namespace bruhatkit::lowrank;

TEST(Gaussian, Arithmetic) {
  const Gaussian a{Rational(1), Rational(2)};
  const Gaussian b{Rational(3), Rational(-1)};
  EXPECT_EQ(a * b, (Gaussian{Rational(5), Rational(5)}));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(Gaussian::i() * Gaussian::i(), Gaussian(-1));
  EXPECT_EQ(to_string(Gaussian{Rational(1, 2), Rational(-1)}), "1/2-i");
}

TEST(GaussianMatrix, BracketAndKilling) {
  const auto x = su21_element({1, 2, 3, 4, 5, 6});
  const auto y = su21_element({0, 1, -1, 2, Rational(1, 2), 3});
  EXPECT_TRUE(bracket(x, x).is_zero());
  EXPECT_EQ(bracket(x, y), -bracket(y, x));
  EXPECT_EQ(killing(x, y), killing(y, x));
  EXPECT_EQ(killing(x, y), Gaussian(6) * (x * y).trace());
  EXPECT_THROW(bracket(GaussianMatrix(2), GaussianMatrix(3)), ValidationError);
}

TEST(GaussianMatrix, Sl2AdTEigenvalues) {
  // T = [[i, 0], [0, -i]] on the basis E, F, H
  const GaussianMatrix t{{Gaussian::i(), Gaussian(0)}, {Gaussian(0), -Gaussian::i()}};
  const GaussianMatrix e = GaussianMatrix::unit(2, 0, 1);
  const GaussianMatrix f = GaussianMatrix::unit(2, 1, 0);
  const GaussianMatrix h{{Gaussian(1), Gaussian(0)}, {Gaussian(0), Gaussian(-1)}};
  EXPECT_EQ(ad_eigenvalue(t, e), std::optional<Gaussian>(Gaussian(0, 2)));
  EXPECT_EQ(ad_eigenvalue(t, f), std::optional<Gaussian>(Gaussian(0, -2)));
  EXPECT_EQ(ad_eigenvalue(t, h), std::optional<Gaussian>(Gaussian(0)));
  EXPECT_FALSE(ad_eigenvalue(t, e + f).has_value());
}

TEST(Sl2, RepresentativesClassifyToThemselves) {
  for (Sl2Class c : {Sl2Class::K, Sl2Class::A, Sl2Class::N, Sl2Class::O2}) {
    const auto r = sl2_representative(c);
    EXPECT_EQ(sl2_classify(r[0][0], r[0][1], r[1][0]), c);
  }
  EXPECT_EQ(sl2_classify(0, -1, 1), Sl2Class::K);
  EXPECT_EQ(sl2_classify(1, 0, 0), Sl2Class::A);
  EXPECT_EQ(sl2_classify(0, 1, 0), Sl2Class::N);
  EXPECT_EQ(sl2_classify(0, 0, 0), Sl2Class::O2);
  EXPECT_EQ(sl2_classify(1, 1, -1), Sl2Class::N);
}

TEST(Sl2, NormalizerExamples) {
  const auto n = sl2_normalizer_exact(0, 2, 0);
  ASSERT_TRUE(n.has_value());
  EXPECT_EQ(n->tag, Sl2Class::N);
  EXPECT_EQ(n->lambda, Rational(1, 2));
  EXPECT_TRUE(check_normalizer_exact(0, 2, 0, *n));
  const auto k = sl2_normalizer(0, -1, 1);
  EXPECT_TRUE(check_normalizer(0, -1, 1, k).within(1e-12));
  EXPECT_THROW(sl2_normalizer(0, 0, 0), ValidationError);
}

TEST(Sl2, ShearBranchForDiagonalizableWithZeroC) {
  for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{{1, 0}, {2, 4}, {Rational(1, 2), 1}, {-3, 5}}) {
    const auto n = sl2_normalizer(a, b, 0);
    EXPECT_EQ(n.tag, Sl2Class::A);
    EXPECT_TRUE(check_normalizer(a, b, 0, n).within(1e-9));
  }
}

TEST(Sl2, SampleSuitesPass) {
  for (Sl2Class c : {Sl2Class::K, Sl2Class::A, Sl2Class::N, Sl2Class::O2}) {
    const auto s = sl2_sample_suite(c, 1000, 0);
    EXPECT_TRUE(s.ok()) << to_string(c);
    EXPECT_LE(s.max_entry_error, 1e-9);
    EXPECT_LE(s.max_det_error, 1e-9);
    for (std::uint64_t k = 0; k < 50; ++k) {
      const auto x = sl2_random_element(c, 0, k);
      EXPECT_EQ(sl2_classify(x[0][0], x[0][1], x[1][0]), c);
    }
  }
  EXPECT_GT(sl2_sample_suite(Sl2Class::N, 1000, 0).exact_checked, 0u);
}

TEST(Sl2, SamplingIsDeterministicAndSerialMatchesParallel) {
  const auto a = sl2_sample_suite(Sl2Class::K, 300, 42, 1e-9, Exec::serial);
  const auto b = sl2_sample_suite(Sl2Class::K, 300, 42, 1e-9, Exec::parallel);
  EXPECT_EQ(a.normalizer_passed, b.normalizer_passed);
  EXPECT_EQ(a.exact_checked, b.exact_checked);
  EXPECT_EQ(a.max_entry_error, b.max_entry_error);
  EXPECT_EQ(sl2_random_element(Sl2Class::A, 7, 3), sl2_random_element(Sl2Class::A, 7, 3));
  EXPECT_NE(sl2_random_element(Sl2Class::A, 7, 3), sl2_random_element(Sl2Class::A, 8, 3));
}

TEST(Sl2, RandomActionsHaveUnitDeterminant) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    const auto [lambda, g] = sl2_random_action(0, k);
    EXPECT_NE(lambda, 0);
    EXPECT_EQ(g[0][0] * g[1][1] - g[0][1] * g[1][0], Rational(1));
  }
}

TEST(Su21, CoordinatesRoundTrip) {
  const std::array<Rational, 6> p{1, -2, Rational(1, 3), 4, 0, -5};
  EXPECT_EQ(su21_coordinates(su21_element(p)), p);
  const GaussianMatrix t = GaussianMatrix::diagonal({Gaussian::i(), Gaussian(0), -Gaussian::i()});
  // ad T(g) is stable under ad T
  const auto x = su21_element(p);
  const auto tx = bracket(t, x);
  EXPECT_EQ(su21_element(su21_coordinates(tx)), tx);
}

TEST(Su21, SignatureTable) {
  const auto rep = su21_signature_table();
  EXPECT_TRUE(rep.omega_antisymmetric);
  EXPECT_TRUE(rep.omega_nondegenerate);
  ASSERT_EQ(rep.metrics.size(), 6u);
  const std::vector<std::pair<int, int>> expected{{2, 4}, {4, 2}, {4, 2}, {2, 4}, {6, 0}, {0, 6}};
  for (std::size_t k = 0; k < 6; ++k) {
    const auto& m = rep.metrics[k];
    EXPECT_EQ(m.index, static_cast<int>(k) + 1);
    EXPECT_EQ(std::make_pair(m.negatives, m.positives), expected[k]) << "g" << k + 1;
    EXPECT_TRUE(m.symmetric);
    EXPECT_TRUE(m.nondegenerate);
    EXPECT_TRUE(m.j_squares_to_minus_one);
  }
}

TEST(Su21, ComplexStructuresSquareToMinusOne) {
  const std::array<Rational, 6> p{1, 2, 3, 4, 5, 6};
  const auto x = su21_element(p);
  for (int a = 1; a <= 6; ++a) EXPECT_EQ(su21_complex_structure(a, su21_complex_structure(a, x)), -x) << a;
}

TEST(Inertia, Diagonalization) {
  const auto i = inertia({{0, 1}, {1, 0}});
  EXPECT_EQ(i.negatives, 1);
  EXPECT_EQ(i.positives, 1);
  const auto j = inertia({{1, 2, 0}, {2, 4, 0}, {0, 0, -3}});
  EXPECT_EQ(j.zeros, 1);
  EXPECT_EQ(j.negatives, 1);
  EXPECT_EQ(j.positives, 1);
}

TEST(A2Model, LevelsMatchGrading) {
  const auto rs = build_root_system(CartanMatrix::from_label("A2"));
  for (const RationalVector& c : {RationalVector{1, 0}, RationalVector{0, 1}, RationalVector{1, -2},
                                  RationalVector{Rational(1, 2), Rational(3, 2)}}) {
    const auto model = oracle::a2_matrix_levels(c);
    const auto g = grade(rs, EllipticElement{c});
    ASSERT_EQ(model.size(), 6u);
    for (const auto& [root, level] : model) EXPECT_EQ(g.value(rs.require(Root{root})), level);
    for (const auto& ml : a2_model_levels(c)) EXPECT_EQ(model.at(ml.root.coords), ml.level);
  }
}

TEST(A2Model, WeylActionsArePermutationsOfRoots) {
  const auto rs = build_root_system(CartanMatrix::from_label("A2"));
  const auto acts = a2_model_weyl_actions();
  EXPECT_EQ(acts.size(), 6u);
  const auto group = WeylGroup::enumerate(rs);
  std::set<std::vector<RootId>> from_model;
  for (const auto& perm : acts) {
    std::vector<RootId> action(static_cast<std::size_t>(rs.num_roots()));
    for (const auto& [src, dst] : perm) action[static_cast<std::size_t>(rs.require(src))] = rs.require(dst);
    from_model.insert(action);
  }
  std::set<std::vector<RootId>> from_group;
  for (const auto& w : group.elements()) from_group.insert(w.action);
  EXPECT_EQ(from_model, from_group);
}

TEST(A2Model, CompactRootsOfSu21) {
  const auto rs = build_root_system(CartanMatrix::from_label("A2"));
  std::set<std::vector<int>> model;
  for (const auto& r : su21_compact_model_roots()) model.insert(r.coords);
  std::set<std::vector<int>> combinatorial;
  for (RootId a : compact_roots(rs, InnerInvolution{{0, 1}}).compact.ids()) combinatorial.insert(rs.root(a).coords);
  EXPECT_EQ(model, combinatorial);
  EXPECT_EQ(model, (std::set<std::vector<int>>{{1, 0}, {-1, 0}}));
}
