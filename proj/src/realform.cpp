#include "bruhatkit/realform.hpp"

#include <algorithm>
#include <limits>

namespace bruhatkit {

namespace {

void require_rank(const RootSystem& rs, std::size_t size, const char* what) {
  if (static_cast<int>(size) != rs.rank())
    throw ValidationError(std::string(what) + " has " + std::to_string(size) + " coordinates, rank is " +
                          std::to_string(rs.rank()));
}

bool even(std::int64_t v) { return v % 2 == 0; }

}  // namespace

CompactRootData compact_roots(const RootSystem& rs, const InnerInvolution& inv) {
  require_rank(rs, inv.coweight.size(), "involution coweight");
  CompactRootData out{rs.empty_set(), rs.empty_set(), {}};
  out.values.reserve(static_cast<std::size_t>(rs.num_roots()));
  for (RootId a = 0; a < rs.num_roots(); ++a) {
    std::int64_t v = 0;
    const auto& coords = rs.root(a).coords;
    for (std::size_t k = 0; k < coords.size(); ++k) v += coords[k] * inv.coweight[k];
    out.values.push_back(v);
    (even(v) ? out.compact : out.noncompact).insert(a);
  }
  return out;
}

InnerInvolution conjugate(const RootSystem& rs, const WeylElement& w, const InnerInvolution& inv) {
  require_rank(rs, inv.coweight.size(), "involution coweight");
  RationalVector z(inv.coweight.begin(), inv.coweight.end());
  InnerInvolution out;
  for (const auto& c : act_on_coweight(rs, w, z)) {
    if (c.denominator() != 1) throw IdentityCheckFailure("Weyl conjugate of an integer coweight is not integral");
    out.coweight.push_back(c.numerator());
  }
  return out;
}

std::vector<FundamentalSystem> enumerate_fundamental_systems(const WeylGroup& group) {
  const auto& rs = group.root_system();
  std::vector<FundamentalSystem> out;
  out.reserve(group.size());
  for (std::size_t w = 0; w < group.size(); ++w) {
    FundamentalSystem fs{w, {}};
    for (int i = 0; i < rs.rank(); ++i) fs.roots.push_back(act(group[w], rs.simple(i)));
    out.push_back(std::move(fs));
  }
  return out;
}

bool is_fundamental_system(const RootSystem& rs, std::span<const RootId> system) {
  const int l = rs.rank();
  if (static_cast<int>(system.size()) != l) return false;
  for (RootId a : system)
    if (a < 0 || a >= rs.num_roots()) return false;

  // Solve M x = beta for each root, M having the system's coordinates as columns.
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(l), std::vector<Rational>(static_cast<std::size_t>(l)));
  for (int col = 0; col < l; ++col)
    for (int row = 0; row < l; ++row) m[row][col] = rs.root(system[col]).coords[row];
  // Gauss-Jordan inverse.
  std::vector<std::vector<Rational>> inv(static_cast<std::size_t>(l), std::vector<Rational>(static_cast<std::size_t>(l), Rational(0)));
  for (int i = 0; i < l; ++i) inv[i][i] = 1;
  for (int p = 0; p < l; ++p) {
    int pivot = -1;
    for (int r = p; r < l; ++r)
      if (m[r][p] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(m[p], m[pivot]);
    std::swap(inv[p], inv[pivot]);
    const Rational scale = m[p][p];
    for (int c = 0; c < l; ++c) {
      m[p][c] /= scale;
      inv[p][c] /= scale;
    }
    for (int r = 0; r < l; ++r) {
      if (r == p || m[r][p] == 0) continue;
      const Rational f = m[r][p];
      for (int c = 0; c < l; ++c) {
        m[r][c] -= f * m[p][c];
        inv[r][c] -= f * inv[p][c];
      }
    }
  }
  for (RootId a = 0; a < rs.num_roots(); ++a) {
    const auto& beta = rs.root(a).coords;
    bool has_pos = false;
    bool has_neg = false;
    for (int r = 0; r < l; ++r) {
      Rational x = 0;
      for (int c = 0; c < l; ++c) x += inv[r][c] * beta[c];
      if (x.denominator() != 1) return false;
      has_pos = has_pos || x > 0;
      has_neg = has_neg || x < 0;
    }
    if (has_pos && has_neg) return false;
  }
  return true;
}

bool check_s1(const RootSystem& rs, std::span<const RootId> system, const EllipticElement& t) {
  require_rank(rs, t.coeffs.size(), "elliptic element");
  return std::all_of(system.begin(), system.end(),
                     [&](RootId a) { return evaluate_on_coweight(rs, a, t.coeffs) >= 0; });
}

bool check_s2(const RootSystem& rs, std::span<const RootId> system, const EllipticElement& t,
              const CompactRootData& compact) {
  require_rank(rs, t.coeffs.size(), "elliptic element");
  return std::all_of(system.begin(), system.end(), [&](RootId b) {
    return evaluate_on_coweight(rs, b, t.coeffs) == 0 || compact.is_compact(b);
  });
}

std::string to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::hermitian_fast_fail:
      return "hermitian_fast_fail";
    case FailureReason::exhausted_search:
      return "exhausted_search";
  }
  return "unknown";
}

CriterionVerdict criterion_s(const WeylGroup& group, const EllipticElement& t, const InnerInvolution& inv,
                             Exec exec) {
  const auto& rs = group.root_system();
  const CompactRootData compact = compact_roots(rs, inv);
  require_rank(rs, t.coeffs.size(), "elliptic element");
  CriterionVerdict verdict;

  // (s2) needs a compact root with a(T) != 0 inside the system once T != 0.
  if (!t.is_zero()) {
    bool any = false;
    for (RootId a = 0; a < rs.num_roots() && !any; ++a)
      any = evaluate_on_coweight(rs, a, t.coeffs) != 0 && compact.is_compact(a);
    if (!any) {
      verdict.failure = FailureReason::hermitian_fast_fail;
      return verdict;
    }
  }

  const auto systems = enumerate_fundamental_systems(group);
  auto passes = [&](std::size_t k) {
    return check_s1(rs, systems[k].roots, t) && check_s2(rs, systems[k].roots, t, compact);
  };

  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::size_t found = none;
  if (exec == Exec::parallel) {
    const auto total = static_cast<std::int64_t>(systems.size());
    std::size_t best = none;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::int64_t k = 0; k < total; ++k)
      if (passes(static_cast<std::size_t>(k))) best = std::min(best, static_cast<std::size_t>(k));
    found = best;
    verdict.systems_examined = systems.size();
  } else {
    for (std::size_t k = 0; k < systems.size(); ++k) {
      ++verdict.systems_examined;
      if (passes(k)) {
        found = k;
        break;
      }
    }
  }

  if (found == none) {
    verdict.failure = FailureReason::exhausted_search;
    return verdict;
  }
  verdict.holds = true;
  verdict.conjugator = systems[found].conjugator;
  for (RootId a : systems[found].roots)
    verdict.witness.push_back(WitnessRoot{a, evaluate_on_coweight(rs, a, t.coeffs),
                                          compact.values[static_cast<std::size_t>(a)], compact.is_compact(a)});
  return verdict;
}

std::optional<std::string> holomorphic_vector_field_note(const CartanMatrix& cartan, const EllipticElement& t,
                                                         const InnerInvolution& inv) {
  const auto& c = t.coeffs;
  const std::vector<std::int64_t> z2{0, 1};
  if (cartan == CartanMatrix::from_label("G2") && inv.coweight == z2) {
    if (c == RationalVector{1, -2})
      return "G/L = G2(2)/(SL(2,R).T^1); holomorphic vector fields on the flag manifold form (g2)_C";
    if (c == RationalVector{1, -3})
      return "G/L = G2(2)/(SL(2,R).T^1); holomorphic vector fields on the flag manifold form so(7,C)";
  }
  if (cartan == CartanMatrix::from_label("A2") && inv.coweight == z2 && c == RationalVector{1, 0})
    return "G/L = SU(2,1)/S(U(1)xU(1,1)); holomorphic vector fields on the flag manifold form sl(3,C)";
  return std::nullopt;
}

}  // namespace bruhatkit
