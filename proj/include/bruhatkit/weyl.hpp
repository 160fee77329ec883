#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "bruhatkit/errors.hpp"
#include "bruhatkit/rootsys.hpp"

namespace bruhatkit {

inline constexpr std::size_t kDefaultWeylCap = 1'000'000;

// A Weyl group element, stored as its permutation of the roots. Two elements
// are equal exactly when their inversion sets agree.
struct WeylElement {
  std::vector<RootId> action;  // action[a] = w(a)
  std::vector<int> word;       // lexicographically least reduced word, 0-based
  RootSet inversions;          // {b > 0 : w^{-1}(b) < 0}

  int length() const noexcept { return static_cast<int>(word.size()); }
  bool operator==(const WeylElement& other) const { return inversions == other.inversions; }
};

WeylElement identity_element(const RootSystem& rs);
// Product s_{word[0]} s_{word[1]} ...; the word need not be reduced.
WeylElement from_word(const RootSystem& rs, std::span<const int> word);
WeylElement from_action(const RootSystem& rs, std::vector<RootId> action);
WeylElement reflection(const RootSystem& rs, RootId beta);
// a * b, acting as a(b(x)).
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

inline RootId act(const WeylElement& w, RootId alpha) { return w.action[static_cast<std::size_t>(alpha)]; }
inline const RootSet& inversion_set(const WeylElement& w) { return w.inversions; }

RootSet compute_inversion_set(const RootSystem& rs, std::span<const RootId> action);
// Greedy left descents: the smallest simple root in the inversion set comes first.
std::vector<int> canonical_word(const RootSystem& rs, std::span<const RootId> action);

// Coweight coordinates of w.X given those of X: a_j(w.X) = (w^{-1} a_j)(X).
RationalVector act_on_coweight(const RootSystem& rs, const WeylElement& w, std::span<const Rational> coweight);

// The full group, in canonical order (length, then reduced word). Index 0 is
// the identity. The RootSystem must outlive the group.
class WeylGroup {
 public:
  static WeylGroup enumerate(const RootSystem& rs, std::size_t cap = kDefaultWeylCap,
                             Exec exec = Exec::parallel);

  const RootSystem& root_system() const noexcept { return *rs_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const WeylElement> elements() const noexcept { return elements_; }

  std::size_t identity() const noexcept { return 0; }
  std::size_t longest() const noexcept { return longest_; }
  std::optional<std::size_t> index_of(const RootSet& inversions) const;
  std::size_t index_of(const WeylElement& w) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t reflection(RootId beta) const;
  std::size_t simple_reflection(int i) const { return reflection(rs_->simple(i)); }

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<WeylElement> elements_;
  std::unordered_map<RootSet, std::size_t, RootSetHash> by_inversions_;
  std::size_t longest_ = 0;
};

inline WeylGroup enumerate_weyl_group(const RootSystem& rs, std::size_t cap = kDefaultWeylCap,
                                      Exec exec = Exec::parallel) {
  return WeylGroup::enumerate(rs, cap, exec);
}

// W_1 is the reflection subgroup of the Levi roots; W^1 collects the elements
// whose inversion set avoids them. Indices refer to the WeylGroup, ascending.
struct CosetSets {
  RootSet levi_roots;
  std::vector<std::size_t> levi_group;     // W_1
  std::vector<std::size_t> minimal_reps;   // W^1
  std::vector<bool> is_minimal;            // indexed by group element

  bool contains_minimal(std::size_t w) const { return is_minimal[w]; }
};

// Rejects Levi root sets that are not symmetric and closed.
CosetSets coset_sets(const WeylGroup& group, const RootSet& levi_roots);

struct Factorization {
  std::size_t tau;    // in W_1
  std::size_t sigma;  // in W^1
};

// w = tau * sigma with tau in W_1, sigma in W^1.
Factorization factorize(const WeylGroup& group, const CosetSets& cosets, std::size_t w);

}  // namespace bruhatkit
