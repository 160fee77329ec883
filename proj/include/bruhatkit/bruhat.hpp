#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bruhatkit/elliptic.hpp"
#include "bruhatkit/errors.hpp"
#include "bruhatkit/weyl.hpp"

namespace bruhatkit {

// One stratum of G_C = coprod_{sigma in W^1} N+ sigma^{-1} Q-.
struct BruhatCell {
  std::size_t sigma = 0;  // index into the WeylGroup, sigma in W^1
  RootSet gamma;          // {g in Phi_[sigma^{-1} kappa] : sigma(g) in D+ - Levi}
  int n = 0;              // codimension |Phi_sigma|
  int cell_dim = 0;       // dim G_C - n
  int u_dim = 0;          // r - n = |gamma|
};

struct Stratification {
  std::vector<BruhatCell> cells;       // ordered by (n, canonical word)
  std::vector<std::size_t> dense_set;  // positions in `cells` with n <= 1
  std::map<int, int> histogram;        // n -> number of cells
  int r = 0;
  int dim_g = 0;
};

// Throws ValidationError when sigma is not in W^1.
RootSet gamma_set(const WeylGroup& group, const CosetSets& cosets, std::size_t sigma,
                  const GradedDecomposition& grading);

Stratification stratify(const WeylGroup& group, const CosetSets& cosets, const GradedDecomposition& grading,
                        Exec exec = Exec::parallel);
Stratification stratify(const WeylGroup& group, const GradedDecomposition& grading, Exec exec = Exec::parallel);

// Counterexamples collected by the identity checks. Empty means everything held.
struct IdentityReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
  void merge(const IdentityReport& other);
};

// Per-sigma identities: Phi_[sigma^{-1} kappa] = Gamma_sigma disjoint-union
// sigma^{-1}(Levi+), |Phi_[sigma^{-1} kappa]| + |Phi_[sigma^{-1}]| = |D+|, the
// two routes to the cell dimension, |Gamma| = r - n, sigma(Gamma) = (D+ - Levi) - Phi_sigma,
// Gamma closed (whenever D+ - Levi is), and l(tau sigma) >= n for tau in W_1.
IdentityReport counting_identities(const WeylGroup& group, const CosetSets& cosets, std::size_t sigma,
                                   const GradedDecomposition& grading);

// Structure of the inversion sets and of W^1 for one Levi root set: closedness,
// D+ = Phi_w disjoint-union Phi_{w kappa}, Levi stability of sigma^{-1}, and
// the n = 0 / n = 1 characterizations.
IdentityReport coset_properties(const WeylGroup& group, const CosetSets& cosets, Exec exec = Exec::parallel);

// Every identity for every cell of a stratification.
IdentityReport all_identities(const WeylGroup& group, const CosetSets& cosets, const GradedDecomposition& grading,
                              Exec exec = Exec::parallel);

struct CodimSummary {
  std::map<int, int> histogram;
  int total = 0;
  int max_codim = 0;
  bool unique_open_cell = false;  // exactly one n = 0
};

CodimSummary closure_codim_consistency(const Stratification& strat);

// {e} together with the simple reflections s_b, b in Pi - Levi, that lie in W^1.
std::vector<std::size_t> expected_dense_set(const WeylGroup& group, const CosetSets& cosets);

}  // namespace bruhatkit
