#pragma once

#include <map>
#include <span>
#include <vector>

#include "bruhatkit/rootsys.hpp"
#include "bruhatkit/weyl.hpp"

namespace bruhatkit {

// An elliptic element T, stored as the coweight coordinates c of -iT = sum_a c_a Z_a.
// Dominance is not required.
struct EllipticElement {
  RationalVector coeffs;

  bool is_zero() const;
  bool operator==(const EllipticElement&) const = default;
};

// Eigenvalue grading of the roots by alpha(-iT).
struct GradedDecomposition {
  EllipticElement element;
  std::vector<Rational> values;                    // indexed by RootId
  std::map<Rational, std::vector<RootId>> levels;  // every nonzero value, both signs
  RootSet levi_roots;                              // alpha(-iT) = 0
  RootSet u_plus;                                  // alpha(-iT) > 0
  RootSet u_minus;                                 // alpha(-iT) < 0

  int rank = 0;
  int dim_g = 0;           // |roots| + rank
  int dim_levi = 0;        // rank + |levi_roots|
  int r = 0;               // dim u+ = |u_plus|
  int dim_parabolic = 0;   // dim_levi + r
  int dim_flag = 0;        // complex dimension of the flag manifold, = r

  const Rational& value(RootId a) const { return values[static_cast<std::size_t>(a)]; }
  // Sorted multiset of all root values, zeros included.
  std::vector<Rational> value_multiset() const;
  // Positive Levi roots.
  RootSet levi_positive(const RootSystem& rs) const { return levi_roots & rs.positive_set(); }
  // Positive roots outside the Levi; equals u_plus when T is dominant.
  RootSet positive_nonlevi(const RootSystem& rs) const { return rs.positive_set() - levi_roots; }
};

GradedDecomposition grade(const RootSystem& rs, const EllipticElement& t);

struct DominantForm {
  WeylElement w;               // dominant = w . t
  EllipticElement dominant;    // a_i(-iT') >= 0 for every simple root
};

// Reflects in the first negative simple value until none is left.
DominantForm dominant_form(const RootSystem& rs, const EllipticElement& t);

// omega_j = beta_j(-iT) for the roots of u_plus in canonical root order.
RationalVector unipotent_weights(const GradedDecomposition& grading);

// All (n_1..n_r) >= 0 with sum omega_j n_j = theta, in lexicographic order.
// Each n_k is bounded by theta / omega_k, so the set is finite.
std::vector<std::vector<int>> count_weighted_partitions(std::span<const Rational> weights, const Rational& theta);

}  // namespace bruhatkit
