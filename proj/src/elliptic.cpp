#include "bruhatkit/elliptic.hpp"

#include <algorithm>

#include "bruhatkit/errors.hpp"

namespace bruhatkit {

bool EllipticElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

std::vector<Rational> GradedDecomposition::value_multiset() const {
  std::vector<Rational> out = values;
  std::sort(out.begin(), out.end());
  return out;
}

GradedDecomposition grade(const RootSystem& rs, const EllipticElement& t) {
  if (static_cast<int>(t.coeffs.size()) != rs.rank())
    throw ValidationError("elliptic element has " + std::to_string(t.coeffs.size()) +
                          " coefficients, rank is " + std::to_string(rs.rank()));
  GradedDecomposition g;
  g.element = t;
  g.levi_roots = rs.empty_set();
  g.u_plus = rs.empty_set();
  g.u_minus = rs.empty_set();
  g.values.reserve(static_cast<std::size_t>(rs.num_roots()));
  for (RootId a = 0; a < rs.num_roots(); ++a) {
    const Rational v = evaluate_on_coweight(rs, a, t.coeffs);
    g.values.push_back(v);
    if (v == 0) {
      g.levi_roots.insert(a);
    } else {
      g.levels[v].push_back(a);
      (v > 0 ? g.u_plus : g.u_minus).insert(a);
    }
  }
  g.rank = rs.rank();
  g.dim_g = rs.num_roots() + rs.rank();
  g.dim_levi = rs.rank() + static_cast<int>(g.levi_roots.size());
  g.r = static_cast<int>(g.u_plus.size());
  g.dim_parabolic = g.dim_levi + g.r;
  g.dim_flag = g.r;
  return g;
}

DominantForm dominant_form(const RootSystem& rs, const EllipticElement& t) {
  if (static_cast<int>(t.coeffs.size()) != rs.rank())
    throw ValidationError("elliptic element has " + std::to_string(t.coeffs.size()) +
                          " coefficients, rank is " + std::to_string(rs.rank()));
  RationalVector c = t.coeffs;
  std::vector<int> applied;  // s_{applied.back()} ... s_{applied.front()}
  const auto& cartan = rs.cartan();
  while (true) {
    int i = -1;
    for (int k = 0; k < rs.rank(); ++k)
      if (c[k] < 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    // a_j(s_i X) = a_j(X) - C(j,i) a_i(X)
    const Rational ci = c[i];
    for (int j = 0; j < rs.rank(); ++j) c[j] -= Rational(cartan(j, i)) * ci;
    applied.push_back(i);
  }
  std::vector<int> word(applied.rbegin(), applied.rend());
  DominantForm out{from_word(rs, word), EllipticElement{std::move(c)}};
  if (act_on_coweight(rs, out.w, t.coeffs) != out.dominant.coeffs)
    throw IdentityCheckFailure("dominant_form: w . T does not match the descended coweight");
  return out;
}

RationalVector unipotent_weights(const GradedDecomposition& grading) {
  RationalVector out;
  for (RootId a : grading.u_plus.ids()) out.push_back(grading.value(a));
  return out;
}

namespace {

void partitions_from(std::span<const Rational> w, std::size_t k, const Rational& remaining,
                     std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (k == w.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (int n = 0; Rational(n) * w[k] <= remaining; ++n) {
    current[k] = n;
    partitions_from(w, k + 1, remaining - Rational(n) * w[k], current, out);
  }
  current[k] = 0;
}

}  // namespace

std::vector<std::vector<int>> count_weighted_partitions(std::span<const Rational> weights, const Rational& theta) {
  for (std::size_t j = 0; j < weights.size(); ++j)
    if (weights[j] <= 0)
      throw ValidationError("weight omega_" + std::to_string(j + 1) + " = " + to_string(weights[j]) +
                            " is not positive");
  std::vector<std::vector<int>> out;
  if (theta < 0) return out;
  std::vector<int> current(weights.size(), 0);
  partitions_from(weights, 0, theta, current, out);
  return out;
}

}  // namespace bruhatkit
