#include "bruhatkit/bruhat.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

namespace bruhatkit {

namespace {

std::string word_string(const WeylElement& w) {
  if (w.word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t k = 0; k < w.word.size(); ++k) out << (k ? " " : "") << 's' << (w.word[k] + 1);
  return out.str();
}

RootSet image(const RootSystem& rs, const WeylElement& w, const RootSet& s) {
  RootSet out = rs.empty_set();
  for (RootId a : s.ids()) out.insert(act(w, a));
  return out;
}

// Runs body(k) for k in [0, count), in parallel or serially, with each
// result written to its own slot. Exceptions are captured per slot.
template <typename Body>
std::vector<IdentityReport> run_indexed(std::size_t count, Exec exec, Body body) {
  std::vector<IdentityReport> out(count);
  const auto total = static_cast<std::int64_t>(count);
  auto guarded = [&](std::int64_t k) {
    try {
      out[static_cast<std::size_t>(k)] = body(static_cast<std::size_t>(k));
    } catch (const std::exception& e) {
      out[static_cast<std::size_t>(k)].failures.push_back(std::string("exception: ") + e.what());
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t k = 0; k < total; ++k) guarded(k);
  } else {
    for (std::int64_t k = 0; k < total; ++k) guarded(k);
  }
  return out;
}

}  // namespace

void IdentityReport::merge(const IdentityReport& other) {
  checked += other.checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

RootSet gamma_set(const WeylGroup& group, const CosetSets& cosets, std::size_t sigma,
                  const GradedDecomposition& grading) {
  const auto& rs = group.root_system();
  if (sigma >= group.size() || !cosets.contains_minimal(sigma))
    throw ValidationError("Gamma set requested for an element outside W^1");
  if (!(cosets.levi_roots == grading.levi_roots))
    throw ValidationError("coset data and grading disagree on the Levi roots");
  const auto sik = group.multiply(group.inverse(sigma), group.longest());
  const RootSet target = grading.positive_nonlevi(rs);
  RootSet gamma = rs.empty_set();
  for (RootId g : group[sik].inversions.ids())
    if (target.contains(act(group[sigma], g))) gamma.insert(g);
  return gamma;
}

Stratification stratify(const WeylGroup& group, const CosetSets& cosets, const GradedDecomposition& grading,
                        Exec exec) {
  const auto& reps = cosets.minimal_reps;
  Stratification strat;
  strat.r = static_cast<int>(grading.positive_nonlevi(group.root_system()).size());
  strat.dim_g = grading.dim_g;
  strat.cells.resize(reps.size());

  auto build = [&](std::size_t k) {
    BruhatCell cell;
    cell.sigma = reps[k];
    cell.gamma = gamma_set(group, cosets, cell.sigma, grading);
    cell.n = group[cell.sigma].length();
    cell.cell_dim = strat.dim_g - cell.n;
    cell.u_dim = strat.r - cell.n;
    strat.cells[k] = std::move(cell);
  };
  const auto total = static_cast<std::int64_t>(reps.size());
  if (exec == Exec::parallel) {
    std::vector<std::exception_ptr> errors(reps.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t k = 0; k < total; ++k) {
      try {
        build(static_cast<std::size_t>(k));
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    for (std::int64_t k = 0; k < total; ++k) build(static_cast<std::size_t>(k));
  }

  // Group order is already (length, canonical word); a stable sort keeps it.
  std::stable_sort(strat.cells.begin(), strat.cells.end(),
                   [](const BruhatCell& a, const BruhatCell& b) { return a.n < b.n; });
  for (std::size_t k = 0; k < strat.cells.size(); ++k) {
    ++strat.histogram[strat.cells[k].n];
    if (strat.cells[k].n <= 1) strat.dense_set.push_back(k);
  }
  return strat;
}

Stratification stratify(const WeylGroup& group, const GradedDecomposition& grading, Exec exec) {
  return stratify(group, coset_sets(group, grading.levi_roots), grading, exec);
}

IdentityReport counting_identities(const WeylGroup& group, const CosetSets& cosets, std::size_t sigma,
                                   const GradedDecomposition& grading) {
  const auto& rs = group.root_system();
  IdentityReport rep;
  const auto& s = group[sigma];
  const std::string tag = "sigma = " + word_string(s) + ": ";
  auto expect = [&](bool cond, const std::string& what) {
    ++rep.checked;
    if (!cond) rep.failures.push_back(tag + what);
  };

  const int n = s.length();
  const int num_pos = rs.num_positive();
  const auto sinv = group.inverse(sigma);
  const auto sik = group.multiply(sinv, group.longest());
  const RootSet& phi_sik = group[sik].inversions;
  const RootSet& phi_sinv = group[sinv].inversions;
  const RootSet gamma = gamma_set(group, cosets, sigma, grading);
  const RootSet levi_plus = grading.levi_positive(rs);
  const RootSet nonlevi_plus = grading.positive_nonlevi(rs);
  const int r = static_cast<int>(nonlevi_plus.size());
  const RootSet pulled = image(rs, group[sinv], levi_plus);

  RootSet pulled_literal = rs.empty_set();
  for (RootId g : phi_sik.ids())
    if (levi_plus.contains(act(s, g))) pulled_literal.insert(g);
  expect(pulled == pulled_literal, "sigma^{-1}(Levi+) != {g in Phi_[sigma^{-1} kappa] : sigma(g) in Levi+}");
  expect(gamma.is_disjoint_from(pulled), "Gamma_sigma meets sigma^{-1}(Levi+)");
  expect((gamma | pulled) == phi_sik, "Phi_[sigma^{-1} kappa] != Gamma_sigma u sigma^{-1}(Levi+)");
  expect(static_cast<int>(phi_sik.size() + phi_sinv.size()) == num_pos,
         "|Phi_[sigma^{-1} kappa]| + |Phi_[sigma^{-1}]| != |D+|");

  const int via_parabolic = (r - n) + grading.dim_parabolic;
  const int via_borel = static_cast<int>(phi_sik.size()) + rs.rank() + num_pos;
  expect(via_parabolic == grading.dim_g - n, "(r - n) + dim q- != dim G - n");
  expect(via_borel == grading.dim_g - n, "|Phi_[sigma^{-1} kappa]| + dim b- != dim G - n");

  expect(static_cast<int>(gamma.size()) == r - n, "|Gamma_sigma| != r - n");
  expect(image(rs, s, gamma) == (nonlevi_plus - s.inversions), "sigma(Gamma_sigma) != (D+ - Levi) - Phi_sigma");
  // Closedness of Gamma is inherited from D+ - Levi, which is closed only for a dominant T.
  if (rs.is_closed(nonlevi_plus)) expect(rs.is_closed(gamma), "Gamma_sigma is not closed");

  bool lengths_ok = true;
  for (auto tau : cosets.levi_group)
    if (group[group.multiply(tau, sigma)].length() < n) lengths_ok = false;
  expect(lengths_ok, "some tau in W_1 has l(tau sigma) < n");
  return rep;
}

IdentityReport coset_properties(const WeylGroup& group, const CosetSets& cosets, Exec exec) {
  const auto& rs = group.root_system();
  const RootSet positives = rs.positive_set();
  const RootSet negatives = rs.negative_set();
  const RootSet levi_plus = cosets.levi_roots & positives;
  const RootSet levi_minus = cosets.levi_roots & negatives;

  std::vector<std::size_t> simple_reps;  // s_b for b in Pi - Levi
  for (int i = 0; i < rs.rank(); ++i)
    if (!cosets.levi_roots.contains(rs.simple(i))) simple_reps.push_back(group.simple_reflection(i));

  auto per_element = [&](std::size_t w) {
    IdentityReport rep;
    const auto& el = group[w];
    const std::string tag = "w = " + word_string(el) + ": ";
    auto expect = [&](bool cond, const std::string& what) {
      ++rep.checked;
      if (!cond) rep.failures.push_back(tag + what);
    };
    expect(rs.is_closed(el.inversions), "Phi_w is not closed");
    const RootSet& phi_wk = group[group.multiply(w, group.longest())].inversions;
    expect(el.inversions.is_disjoint_from(phi_wk) && (el.inversions | phi_wk) == positives,
           "D+ != Phi_w disjoint-union Phi_{w kappa}");
    expect(static_cast<int>(el.inversions.size()) == el.length(), "|Phi_w| != reduced length");

    if (cosets.contains_minimal(w)) {
      const auto winv = group.inverse(w);
      expect(image(rs, group[winv], levi_plus).is_subset_of(positives), "sigma^{-1}(Levi+) not positive");
      expect(image(rs, group[winv], levi_minus).is_subset_of(negatives), "sigma^{-1}(Levi-) not negative");
      const int n = el.length();
      expect((n == 0) == (w == group.identity()), "n = 0 does not characterize the identity");
      const bool is_simple_rep = std::find(simple_reps.begin(), simple_reps.end(), w) != simple_reps.end();
      expect((n == 1) == is_simple_rep, "n = 1 does not characterize {s_b : b in Pi - Levi}");
    }
    return rep;
  };

  IdentityReport total;
  for (const auto& r : run_indexed(group.size(), exec, per_element)) total.merge(r);
  return total;
}

IdentityReport all_identities(const WeylGroup& group, const CosetSets& cosets, const GradedDecomposition& grading,
                              Exec exec) {
  IdentityReport total = coset_properties(group, cosets, exec);
  const auto& reps = cosets.minimal_reps;
  auto per_sigma = [&](std::size_t k) { return counting_identities(group, cosets, reps[k], grading); };
  for (const auto& r : run_indexed(reps.size(), exec, per_sigma)) total.merge(r);
  return total;
}

CodimSummary closure_codim_consistency(const Stratification& strat) {
  CodimSummary out;
  for (const auto& cell : strat.cells) {
    ++out.histogram[cell.n];
    ++out.total;
    out.max_codim = std::max(out.max_codim, cell.n);
  }
  out.unique_open_cell = out.histogram.contains(0) && out.histogram.at(0) == 1;
  return out;
}

std::vector<std::size_t> expected_dense_set(const WeylGroup& group, const CosetSets& cosets) {
  const auto& rs = group.root_system();
  std::vector<std::size_t> out{group.identity()};
  for (int i = 0; i < rs.rank(); ++i) {
    if (cosets.levi_roots.contains(rs.simple(i))) continue;
    const auto s = group.simple_reflection(i);
    if (cosets.contains_minimal(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bruhatkit
