#include "bruhatkit/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace bruhatkit {

RootSet compute_inversion_set(const RootSystem& rs, std::span<const RootId> action) {
  // b in Phi_w  <=>  b = w(g) for some g < 0.
  RootSet inv = rs.empty_set();
  for (RootId g = rs.num_positive(); g < rs.num_roots(); ++g) {
    const RootId b = action[static_cast<std::size_t>(g)];
    if (rs.is_positive(b)) inv.insert(b);
  }
  return inv;
}

std::vector<int> canonical_word(const RootSystem& rs, std::span<const RootId> action) {
  std::vector<RootId> current(action.begin(), action.end());
  std::vector<int> word;
  while (true) {
    const RootSet inv = compute_inversion_set(rs, current);
    int descent = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (inv.contains(rs.simple(i))) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    word.push_back(descent);
    // current <- s_i * current
    const auto& s = rs.simple_reflection_table(descent);
    for (auto& a : current) a = s[static_cast<std::size_t>(a)];
  }
  return word;
}

WeylElement from_action(const RootSystem& rs, std::vector<RootId> action) {
  WeylElement w;
  w.inversions = compute_inversion_set(rs, action);
  w.word = canonical_word(rs, action);
  w.action = std::move(action);
  return w;
}

WeylElement identity_element(const RootSystem& rs) {
  std::vector<RootId> action(static_cast<std::size_t>(rs.num_roots()));
  std::iota(action.begin(), action.end(), 0);
  return WeylElement{std::move(action), {}, rs.empty_set()};
}

WeylElement from_word(const RootSystem& rs, std::span<const int> word) {
  std::vector<RootId> action(static_cast<std::size_t>(rs.num_roots()));
  std::iota(action.begin(), action.end(), 0);
  for (int i : word) {
    if (i < 0 || i >= rs.rank())
      throw ValidationError("simple reflection index " + std::to_string(i) + " out of range");
    const auto& s = rs.simple_reflection_table(i);
    // action <- action o s_i
    std::vector<RootId> next(action.size());
    for (std::size_t a = 0; a < action.size(); ++a) next[a] = action[static_cast<std::size_t>(s[a])];
    action = std::move(next);
  }
  return from_action(rs, std::move(action));
}

WeylElement reflection(const RootSystem& rs, RootId beta) { return from_action(rs, rs.reflection_table(beta)); }

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  std::vector<RootId> action(b.action.size());
  for (std::size_t x = 0; x < action.size(); ++x) action[x] = a.action[static_cast<std::size_t>(b.action[x])];
  return from_action(rs, std::move(action));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  std::vector<RootId> action(w.action.size());
  for (std::size_t x = 0; x < action.size(); ++x) action[static_cast<std::size_t>(w.action[x])] = static_cast<RootId>(x);
  return from_action(rs, std::move(action));
}

RationalVector act_on_coweight(const RootSystem& rs, const WeylElement& w, std::span<const Rational> coweight) {
  if (static_cast<int>(coweight.size()) != rs.rank())
    throw ValidationError("coweight has " + std::to_string(coweight.size()) + " coordinates, rank is " +
                          std::to_string(rs.rank()));
  const WeylElement winv = inverse(rs, w);
  RationalVector out(coweight.size());
  for (int j = 0; j < rs.rank(); ++j) out[j] = evaluate_on_coweight(rs, act(winv, rs.simple(j)), coweight);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Candidate {
  bool valid = false;
  std::vector<RootId> action;
  RootSet inversions;
};

// Right multiplication by s_i when it increases length, i.e. when w(a_i) > 0.
Candidate extend(const RootSystem& rs, const WeylElement& w, int i) {
  Candidate c;
  if (!rs.is_positive(w.action[static_cast<std::size_t>(rs.simple(i))])) return c;
  const auto& s = rs.simple_reflection_table(i);
  c.action.resize(w.action.size());
  for (std::size_t a = 0; a < w.action.size(); ++a) c.action[a] = w.action[static_cast<std::size_t>(s[a])];
  c.inversions = compute_inversion_set(rs, c.action);
  c.valid = true;
  return c;
}

}  // namespace

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t cap, Exec exec) {
  WeylGroup g;
  g.rs_ = &rs;
  if (cap == 0) throw CapExceeded(cap);
  g.elements_.push_back(identity_element(rs));
  g.by_inversions_.emplace(g.elements_.back().inversions, 0);

  const int rank = rs.rank();
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  while (level_begin < level_end) {
    const auto level_size = level_end - level_begin;
    std::vector<Candidate> candidates(level_size * static_cast<std::size_t>(rank));
    const auto total = static_cast<std::int64_t>(candidates.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
      for (std::int64_t k = 0; k < total; ++k) {
        const auto e = static_cast<std::size_t>(k) / static_cast<std::size_t>(rank);
        const int i = static_cast<int>(static_cast<std::size_t>(k) % static_cast<std::size_t>(rank));
        candidates[static_cast<std::size_t>(k)] = extend(rs, g.elements_[level_begin + e], i);
      }
    } else {
      for (std::int64_t k = 0; k < total; ++k) {
        const auto e = static_cast<std::size_t>(k) / static_cast<std::size_t>(rank);
        const int i = static_cast<int>(static_cast<std::size_t>(k) % static_cast<std::size_t>(rank));
        candidates[static_cast<std::size_t>(k)] = extend(rs, g.elements_[level_begin + e], i);
      }
    }

    // Join: first discovery in (prefix word, letter) order carries the
    // lexicographically least reduced word.
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      auto& c = candidates[k];
      if (!c.valid || g.by_inversions_.contains(c.inversions)) continue;
      if (g.elements_.size() >= cap) throw CapExceeded(cap);
      const auto& parent = g.elements_[level_begin + k / static_cast<std::size_t>(rank)];
      WeylElement w;
      w.word = parent.word;
      w.word.push_back(static_cast<int>(k % static_cast<std::size_t>(rank)));
      w.action = std::move(c.action);
      w.inversions = std::move(c.inversions);
      g.by_inversions_.emplace(w.inversions, g.elements_.size());
      g.elements_.push_back(std::move(w));
    }
    level_begin = level_end;
    level_end = g.elements_.size();
  }
  g.longest_ = g.elements_.size() - 1;
  if (g.elements_[g.longest_].inversions.size() != static_cast<std::size_t>(rs.num_positive()))
    throw IdentityCheckFailure("last enumerated element is not the longest element");
  return g;
}

std::optional<std::size_t> WeylGroup::index_of(const RootSet& inversions) const {
  const auto it = by_inversions_.find(inversions);
  if (it == by_inversions_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
  if (auto i = index_of(w.inversions)) return *i;
  throw IdentityCheckFailure("element missing from the enumerated Weyl group");
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  const auto& x = elements_[a].action;
  const auto& y = elements_[b].action;
  std::vector<RootId> action(y.size());
  for (std::size_t r = 0; r < action.size(); ++r) action[r] = x[static_cast<std::size_t>(y[r])];
  const auto found = index_of(compute_inversion_set(*rs_, action));
  if (!found) throw IdentityCheckFailure("Weyl group is not closed under multiplication");
  return *found;
}

std::size_t WeylGroup::inverse(std::size_t a) const {
  const auto& x = elements_[a].action;
  std::vector<RootId> action(x.size());
  for (std::size_t r = 0; r < action.size(); ++r) action[static_cast<std::size_t>(x[r])] = static_cast<RootId>(r);
  const auto found = index_of(compute_inversion_set(*rs_, action));
  if (!found) throw IdentityCheckFailure("Weyl group is not closed under inversion");
  return *found;
}

std::size_t WeylGroup::reflection(RootId beta) const {
  const auto table = rs_->reflection_table(beta);
  const auto found = index_of(compute_inversion_set(*rs_, table));
  if (!found) throw IdentityCheckFailure("reflection missing from the enumerated Weyl group");
  return *found;
}

// ---------------------------------------------------------------------------
// Cosets

CosetSets coset_sets(const WeylGroup& group, const RootSet& levi_roots) {
  const auto& rs = group.root_system();
  if (levi_roots.universe() != static_cast<std::size_t>(rs.num_roots()))
    throw ValidationError("Levi root set belongs to a different root system");
  if (!rs.is_symmetric(levi_roots)) throw ValidationError("Levi root set is not symmetric");
  if (!rs.is_closed(levi_roots)) throw ValidationError("Levi root set is not closed");

  CosetSets out;
  out.levi_roots = levi_roots;

  std::vector<std::size_t> generators;
  for (RootId g : levi_roots.ids())
    if (rs.is_positive(g)) generators.push_back(group.reflection(g));

  std::vector<bool> in_levi(group.size(), false);
  in_levi[group.identity()] = true;
  std::deque<std::size_t> queue{group.identity()};
  while (!queue.empty()) {
    const auto w = queue.front();
    queue.pop_front();
    for (auto s : generators) {
      const auto sw = group.multiply(s, w);
      if (!in_levi[sw]) {
        in_levi[sw] = true;
        queue.push_back(sw);
      }
    }
  }

  out.is_minimal.assign(group.size(), false);
  for (std::size_t w = 0; w < group.size(); ++w) {
    if (in_levi[w]) out.levi_group.push_back(w);
    if (group[w].inversions.is_disjoint_from(levi_roots)) {
      out.minimal_reps.push_back(w);
      out.is_minimal[w] = true;
    }
  }
  if (out.levi_group.size() * out.minimal_reps.size() != group.size())
    throw IdentityCheckFailure("|W| != |W_1| * |W^1| (" + std::to_string(group.size()) + " vs " +
                               std::to_string(out.levi_group.size()) + " * " +
                               std::to_string(out.minimal_reps.size()) + ")");
  return out;
}

Factorization factorize(const WeylGroup& group, const CosetSets& cosets, std::size_t w) {
  for (auto tau : cosets.levi_group) {
    const auto sigma = group.multiply(group.inverse(tau), w);
    if (cosets.contains_minimal(sigma)) return {tau, sigma};
  }
  throw IdentityCheckFailure("no factorization w = tau * sigma for element " + std::to_string(w));
}

}  // namespace bruhatkit
