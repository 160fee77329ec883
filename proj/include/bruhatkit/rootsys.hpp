#pragma once

#include <compare>
#include <functional>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bruhatkit/rational.hpp"

namespace bruhatkit {

// Index of a root inside a RootSystem: positives occupy [0, N), and N + k is -(root k).
using RootId = int;

// Integer Cartan matrix with entries C(i,j) = 2<a_i,a_j>/<a_j,a_j>, so the
// simple reflection s_j sends a_i to a_i - C(i,j) a_j.
class CartanMatrix {
 public:
  // Checks shape, the diagonal, the off-diagonal range and the zero pattern.
  // Finite type is checked by build_root_system, which names the failing minor.
  explicit CartanMatrix(std::vector<std::vector<int>> entries);

  // Bourbaki labelling: A1.., B2.., C2.., D4.., E6, E7, E8, F4, G2. In G2 the
  // first simple root is short, matching {a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2}.
  static CartanMatrix from_label(std::string_view label);

  int rank() const noexcept { return static_cast<int>(entries_.size()); }
  int operator()(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<int>>& entries() const noexcept { return entries_; }

  // Determinant of the leading k x k block, for k = 1..rank.
  std::int64_t leading_minor(int k) const;

  bool operator==(const CartanMatrix&) const = default;

 private:
  std::vector<std::vector<int>> entries_;
};

// Integer coordinates on the simple roots.
struct Root {
  std::vector<int> coords;

  int height() const;
  bool is_positive() const;
  bool is_zero() const;
  Root operator-() const;
  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const { return *this + (-other); }
  bool operator==(const Root&) const = default;
  auto operator<=>(const Root&) const = default;
};

// "2a1+a2", "-3a1-2a2". Stable across runs, used in reports.
std::string to_string(const Root& root);

// Strict canonical order: height ascending, then coordinates lexicographically
// descending, so the simple roots come out as a1, a2, ..., a_l.
bool canonical_less(const Root& a, const Root& b);

// Subset of the roots of one RootSystem, indexed by RootId.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::size_t universe) : bits_(universe, false) {}

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(RootId id) const { return bits_[static_cast<std::size_t>(id)]; }
  void insert(RootId id) { bits_[static_cast<std::size_t>(id)] = true; }
  void erase(RootId id) { bits_[static_cast<std::size_t>(id)] = false; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<RootId> ids() const;

  bool is_subset_of(const RootSet& other) const;
  bool is_disjoint_from(const RootSet& other) const;
  RootSet operator|(const RootSet& other) const;
  RootSet operator&(const RootSet& other) const;
  RootSet operator-(const RootSet& other) const;

  bool operator==(const RootSet&) const = default;
  std::size_t hash() const { return std::hash<std::vector<bool>>{}(bits_); }

 private:
  std::vector<bool> bits_;
};

struct RootSetHash {
  std::size_t operator()(const RootSet& s) const { return s.hash(); }
};

class RootSystem {
 public:
  // Positive roots by reflection closure of the simple roots, in canonical
  // order. Throws ValidationError naming the first non-positive leading minor.
  static RootSystem build(const CartanMatrix& cartan);

  const CartanMatrix& cartan() const noexcept { return cartan_; }
  int rank() const noexcept { return cartan_.rank(); }
  int num_positive() const noexcept { return num_positive_; }
  int num_roots() const noexcept { return 2 * num_positive_; }

  const Root& root(RootId id) const { return roots_[static_cast<std::size_t>(id)]; }
  std::span<const Root> roots() const noexcept { return roots_; }
  std::span<const Root> positive_roots() const noexcept {
    return std::span<const Root>(roots_).first(static_cast<std::size_t>(num_positive_));
  }

  RootId simple(int i) const noexcept { return i; }
  bool is_positive(RootId id) const noexcept { return id < num_positive_; }
  RootId negate(RootId id) const noexcept {
    return id < num_positive_ ? id + num_positive_ : id - num_positive_;
  }
  std::optional<RootId> find(const Root& r) const;
  RootId require(const Root& r) const;  // ValidationError when r is not a root
  std::optional<RootId> sum(RootId a, RootId b) const;

  // Symmetric invariant form, normalized so short simple roots have <a,a> = 2.
  Rational pairing(const Root& a, const Root& b) const;
  Rational pairing(RootId a, RootId b) const;
  // 2<a,b>/<b,b>; always an integer on roots.
  int cartan_integer(RootId a, RootId b) const;
  // <a_j,a_j>/2 per simple root; C * diag(symmetrizer) is symmetric.
  const RationalVector& symmetrizer() const noexcept { return symmetrizer_; }

  // s_beta(alpha).
  RootId reflect(RootId alpha, RootId beta) const;
  // Permutation of all RootIds induced by s_beta.
  std::vector<RootId> reflection_table(RootId beta) const;
  // Cached reflection tables for the simple roots.
  const std::vector<RootId>& simple_reflection_table(int i) const {
    return simple_tables_[static_cast<std::size_t>(i)];
  }

  RootSet empty_set() const { return RootSet(static_cast<std::size_t>(num_roots())); }
  RootSet positive_set() const;
  RootSet negative_set() const;
  RootSet make_set(std::span<const RootId> ids) const;
  bool is_closed(const RootSet& s) const;
  bool is_symmetric(const RootSet& s) const;
  std::string name(RootId id) const { return to_string(root(id)); }

 private:
  explicit RootSystem(CartanMatrix cartan) : cartan_(std::move(cartan)) {}

  CartanMatrix cartan_;
  int num_positive_ = 0;
  std::vector<Root> roots_;
  std::map<std::vector<int>, RootId> index_;
  RationalVector symmetrizer_;
  std::vector<std::vector<Rational>> gram_;  // simple-root Gram matrix
  std::vector<Rational> pair_table_;         // num_roots x num_roots
  std::vector<std::vector<RootId>> simple_tables_;
};

inline RootSystem build_root_system(const CartanMatrix& cartan) { return RootSystem::build(cartan); }

// alpha(sum_a c_a Z_a) where {Z_a} is dual to the simple roots.
Rational evaluate_on_coweight(const Root& alpha, std::span<const Rational> coweight);
Rational evaluate_on_coweight(const RootSystem& rs, RootId alpha, std::span<const Rational> coweight);

}  // namespace bruhatkit
