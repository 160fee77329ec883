#include <gtest/gtest.h>

#include <algorithm>

#include "bruhatkit/bruhat.hpp"
#include "bruhatkit/errors.hpp"

using namespace bruhatkit;

namespace {

struct Job {
  RootSystem rs;
  WeylGroup group;
  GradedDecomposition grading;
  CosetSets cosets;

  Job(const std::string& label, RationalVector c)
      : rs(build_root_system(CartanMatrix::from_label(label))),
        group(WeylGroup::enumerate(rs)),
        grading(grade(rs, EllipticElement{std::move(c)})),
        cosets(coset_sets(group, grading.levi_roots)) {}
  Job(const Job&) = delete;
};

std::vector<std::string> names(const WeylGroup& g, const Stratification& s, const std::vector<std::size_t>& pos) {
  std::vector<std::string> out;
  for (auto k : pos) {
    std::string w;
    for (int i : g[s.cells[k].sigma].word) w += "s" + std::to_string(i + 1);
    out.push_back(w.empty() ? "e" : w);
  }
  return out;
}

}  // namespace

TEST(Stratify, A2WithZ1) {
  Job j("A2", {1, 0});
  const auto s = stratify(j.group, j.cosets, j.grading);
  ASSERT_EQ(s.cells.size(), 3u);
  EXPECT_EQ(s.cells[0].n, 0);
  EXPECT_EQ(s.cells[1].n, 1);
  EXPECT_EQ(s.cells[2].n, 2);
  EXPECT_EQ(s.r, 2);
  for (const auto& c : s.cells) {
    EXPECT_EQ(c.cell_dim, 8 - c.n);
    EXPECT_EQ(c.u_dim, 2 - c.n);
  }
}

TEST(Stratify, A2BorelLengths) {
  Job j("A2", {1, 1});
  const auto s = stratify(j.group, j.cosets, j.grading);
  std::vector<int> ns;
  for (const auto& c : s.cells) ns.push_back(c.n);
  EXPECT_EQ(ns, (std::vector<int>{0, 1, 1, 2, 2, 3}));
  const auto summary = closure_codim_consistency(s);
  EXPECT_TRUE(summary.unique_open_cell);
  EXPECT_EQ(summary.max_codim, 3);
  EXPECT_EQ(summary.histogram, (std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
}

TEST(Stratify, G2CaseA) {
  Job j("G2", {1, -2});
  const auto s = stratify(j.group, j.cosets, j.grading);
  ASSERT_EQ(s.cells.size(), 6u);
  EXPECT_EQ(names(j.group, s, s.dense_set), (std::vector<std::string>{"e", "s1", "s2"}));
  std::vector<std::size_t> expected = expected_dense_set(j.group, j.cosets);
  std::vector<std::size_t> got;
  for (auto k : s.dense_set) got.push_back(s.cells[k].sigma);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(Stratify, GammaOutsideMinimalRepsThrows) {
  Job j("G2", {1, -2});
  std::size_t outside = 0;
  while (j.cosets.contains_minimal(outside)) ++outside;
  EXPECT_THROW(gamma_set(j.group, j.cosets, outside, j.grading), ValidationError);
}

TEST(Stratify, SerialAndParallelAgree) {
  Job j("B3", {1, 0, 1});
  const auto a = stratify(j.group, j.cosets, j.grading, Exec::serial);
  const auto b = stratify(j.group, j.cosets, j.grading, Exec::parallel);
  ASSERT_EQ(a.cells.size(), b.cells.size());
  for (std::size_t k = 0; k < a.cells.size(); ++k) {
    EXPECT_EQ(a.cells[k].sigma, b.cells[k].sigma);
    EXPECT_EQ(a.cells[k].gamma, b.cells[k].gamma);
  }
  const auto ia = all_identities(j.group, j.cosets, j.grading, Exec::serial);
  const auto ib = all_identities(j.group, j.cosets, j.grading, Exec::parallel);
  EXPECT_EQ(ia.checked, ib.checked);
  EXPECT_EQ(ia.failures, ib.failures);
}

TEST(Identities, HoldAcrossTypesAndElements) {
  const std::vector<std::pair<std::string, std::vector<RationalVector>>> cases{
      {"A2", {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, -1}, {Rational(1, 2), -2}}},
      {"B2", {{1, 0}, {0, 1}, {1, 1}, {-1, 2}}},
      {"G2", {{1, -2}, {1, -3}, {1, 0}, {0, 1}, {2, -1}}},
      {"A3", {{1, 0, 1}, {0, 1, 0}, {1, -1, 1}}},
      {"C3", {{0, 0, 1}, {1, 1, 0}}}};
  for (const auto& [label, elems] : cases)
    for (const auto& c : elems) {
      Job j(label, c);
      const auto rep = all_identities(j.group, j.cosets, j.grading);
      EXPECT_TRUE(rep.ok()) << label << ": " << (rep.failures.empty() ? "" : rep.failures.front());
      EXPECT_GT(rep.checked, 0u);
      const auto s = stratify(j.group, j.cosets, j.grading);
      EXPECT_EQ(s.cells.size(), j.cosets.minimal_reps.size());
      for (const auto& cell : s.cells) {
        EXPECT_EQ(static_cast<int>(cell.gamma.size()), s.r - cell.n);
        EXPECT_EQ(cell.n, j.group[cell.sigma].length());
      }
    }
}
