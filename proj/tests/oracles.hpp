#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bruhatkit/lowrank.hpp"
#include "bruhatkit/rational.hpp"
#include "bruhatkit/rootsys.hpp"

namespace oracle {

using bruhatkit::Rational;
using Coords = std::vector<int>;

// Positive roots grown height by height with root strings: for a positive
// root b != a_i, b + a_i is a root iff q > 0 where q = p - <b, a_i^vee> and p
// is the length of the downward a_i-string through b.
inline std::vector<Coords> positive_roots_by_height(const std::vector<std::vector<int>>& c) {
  const int n = static_cast<int>(c.size());
  std::set<Coords> all;
  std::vector<Coords> layer;
  for (int i = 0; i < n; ++i) {
    Coords e(static_cast<std::size_t>(n), 0);
    e[i] = 1;
    layer.push_back(e);
    all.insert(e);
  }
  std::vector<Coords> out = layer;
  while (!layer.empty()) {
    std::set<Coords> next;
    for (const auto& b : layer) {
      for (int i = 0; i < n; ++i) {
        Coords unit(static_cast<std::size_t>(n), 0);
        unit[i] = 1;
        if (b == unit) continue;
        int p = 0;
        for (Coords d = b; ; ++p) {
          d[i] -= 1;
          if (!all.contains(d)) break;
        }
        int pairing = 0;
        for (int k = 0; k < n; ++k) pairing += b[k] * c[k][i];
        if (p - pairing > 0) {
          Coords up = b;
          up[i] += 1;
          if (!all.contains(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      all.insert(r);
      out.push_back(r);
    }
  }
  return out;
}

inline int height(const Coords& c) {
  int h = 0;
  for (int v : c) h += v;
  return h;
}

// Weyl group order from the matrix action on a regular coweight.
inline std::size_t weyl_order_by_orbit(const std::vector<std::vector<int>>& c) {
  const int n = static_cast<int>(c.size());
  // a_j(s_i X) = a_j(X) - C(j,i) a_i(X), starting from a_j(X) = 1.
  std::vector<std::int64_t> rho(static_cast<std::size_t>(n), 1);
  std::set<std::vector<std::int64_t>> seen{rho};
  std::vector<std::vector<std::int64_t>> frontier{rho};
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& v : frontier)
      for (int i = 0; i < n; ++i) {
        auto w = v;
        for (int j = 0; j < n; ++j) w[j] = v[j] - static_cast<std::int64_t>(c[j][i]) * v[i];
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// Closed-form orders for the types used in the sweeps.
inline std::size_t weyl_order_formula(const std::string& label) {
  static const std::map<std::string, std::size_t> table{{"A1", 2},  {"A2", 6},   {"A3", 24},   {"A4", 120},
                                                        {"B2", 8},  {"B3", 48},  {"C3", 48},   {"B4", 384},
                                                        {"D4", 192}, {"G2", 12}, {"F4", 1152}, {"E6", 51840}};
  return table.at(label);
}

// Every vector in the box prod [0, floor(theta / w_k)] whose weighted sum is theta.
inline void box_walk(const std::vector<Rational>& w, const Rational& theta, const std::vector<int>& bound,
                     std::vector<int>& v, std::size_t k, std::vector<std::vector<int>>& out) {
  if (k == w.size()) {
    Rational s(0);
    for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * Rational(v[j]);
    if (s == theta) out.push_back(v);
    return;
  }
  for (int x = 0; x <= bound[k]; ++x) {
    v[k] = x;
    box_walk(w, theta, bound, v, k + 1, out);
  }
  v[k] = 0;
}

inline std::vector<std::vector<int>> partitions_by_box(const std::vector<Rational>& w, const Rational& theta) {
  std::vector<std::vector<int>> out;
  if (theta < Rational(0)) return out;
  std::vector<int> bound(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Rational q = theta / w[k];
    bound[k] = static_cast<int>(q.numerator() / q.denominator());
  }
  std::vector<int> v(w.size(), 0);
  box_walk(w, theta, bound, v, 0, out);
  return out;
}

// alpha(-iT) straight from the coordinates.
inline Rational value(const Coords& alpha, const std::vector<Rational>& coeffs) {
  Rational v(0);
  for (std::size_t k = 0; k < alpha.size(); ++k) v += Rational(alpha[k]) * coeffs[k];
  return v;
}

// ad T eigenvalues on E_ij in the sl(3) model with T = i(c1 Z1 + c2 Z2),
// reported as the real multiple of i; keyed by the root e_i - e_j in simple coordinates.
inline std::map<Coords, Rational> a2_matrix_levels(const std::vector<Rational>& coeffs) {
  using namespace bruhatkit::lowrank;
  GaussianMatrix t = (a2_coweight_matrix(1) * Gaussian(coeffs[0]) + a2_coweight_matrix(2) * Gaussian(coeffs[1])) *
                     Gaussian::i();
  std::map<Coords, Rational> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const auto e = GaussianMatrix::unit(3, i, j);
      const auto mu = bracket(t, e);
      // [T, E_ij] = (t_i - t_j) E_ij
      const Gaussian ev = mu(i, j);
      Coords root{0, 0};
      // e_i - e_j = sum over k in [min, max) of a_k with sign
      const int lo = std::min(i, j), hi = std::max(i, j);
      for (int k = lo; k < hi; ++k) root[k] = (i < j) ? 1 : -1;
      out[root] = ev.im;
    }
  return out;
}

}  // namespace oracle
