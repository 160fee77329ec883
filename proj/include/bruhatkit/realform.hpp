#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bruhatkit/elliptic.hpp"
#include "bruhatkit/errors.hpp"
#include "bruhatkit/weyl.hpp"

namespace bruhatkit {

// theta = exp(pi ad(iZ)) for an integer coweight Z. theta(E_a) = (-1)^{a(Z)} E_a.
struct InnerInvolution {
  std::vector<std::int64_t> coweight;
};

struct CompactRootData {
  RootSet compact;      // a(Z) even
  RootSet noncompact;   // a(Z) odd
  std::vector<std::int64_t> values;  // a(Z), indexed by RootId

  bool is_compact(RootId a) const { return compact.contains(a); }
};

CompactRootData compact_roots(const RootSystem& rs, const InnerInvolution& inv);

// Coweight coordinates of w.Z for an integer coweight.
InnerInvolution conjugate(const RootSystem& rs, const WeylElement& w, const InnerInvolution& inv);

// w(Pi) for one Weyl element, listed as w(a_1), ..., w(a_l).
struct FundamentalSystem {
  std::size_t conjugator = 0;  // index into the WeylGroup
  std::vector<RootId> roots;
};

// One system per group element, in the group's canonical order.
std::vector<FundamentalSystem> enumerate_fundamental_systems(const WeylGroup& group);

// True when `system` is a basis of the root lattice in which every root has
// coefficients of a single sign.
bool is_fundamental_system(const RootSystem& rs, std::span<const RootId> system);

// a(-iT) >= 0 for every a in the system.
bool check_s1(const RootSystem& rs, std::span<const RootId> system, const EllipticElement& t);
// Every b in the system with b(-iT) != 0 is compact.
bool check_s2(const RootSystem& rs, std::span<const RootId> system, const EllipticElement& t,
              const CompactRootData& compact);

enum class FailureReason { hermitian_fast_fail, exhausted_search };
std::string to_string(FailureReason reason);

struct WitnessRoot {
  RootId root = 0;
  Rational value;             // root(-iT)
  std::int64_t parity_value;  // root(Z)
  bool compact = false;
};

struct CriterionVerdict {
  bool holds = false;
  std::optional<std::size_t> conjugator;  // w with witness = w(Pi)
  std::vector<WitnessRoot> witness;
  std::optional<FailureReason> failure;
  std::size_t systems_examined = 0;
};

// Searches the Weyl orbit of Pi for a system satisfying (s1) and (s2). The
// first hit in canonical order (length, then word) is the witness. For T != 0
// the search is skipped when no root with a(-iT) != 0 is compact.
CriterionVerdict criterion_s(const WeylGroup& group, const EllipticElement& t, const InnerInvolution& inv,
                             Exec exec = Exec::parallel);

// Free-text identification of the holomorphic vector fields on the flag
// manifold, for the three documented (type, T, Z) cases only.
std::optional<std::string> holomorphic_vector_field_note(const CartanMatrix& cartan, const EllipticElement& t,
                                                         const InnerInvolution& inv);

}  // namespace bruhatkit
