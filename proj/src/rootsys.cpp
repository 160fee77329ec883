#include "bruhatkit/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "bruhatkit/errors.hpp"

namespace bruhatkit {

// ---------------------------------------------------------------------------
// CartanMatrix

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  if (n == 0) throw ValidationError("Cartan matrix must have positive rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n)
      throw ValidationError("Cartan matrix must be square: row " + std::to_string(i + 1) + " has " +
                            std::to_string(entries_[i].size()) + " entries, expected " +
                            std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i][i] != 2)
      throw ValidationError("Cartan matrix diagonal entry (" + std::to_string(i + 1) + "," +
                            std::to_string(i + 1) + ") must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int c = entries_[i][j];
      if (c > 0 || c < -3)
        throw ValidationError("Cartan matrix entry (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") = " + std::to_string(c) +
                              " is outside {0,-1,-2,-3}");
      if ((c == 0) != (entries_[j][i] == 0))
        throw ValidationError("Cartan matrix entries (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") and (" + std::to_string(j + 1) + "," +
                              std::to_string(i + 1) + ") must vanish together");
    }
  }
}

namespace {

std::vector<std::vector<int>> identity2(int n) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  return m;
}

void link(std::vector<std::vector<int>>& m, int i, int j) {
  m[i][j] = -1;
  m[j][i] = -1;
}

}  // namespace

CartanMatrix CartanMatrix::from_label(std::string_view label) {
  std::string s(label);
  std::erase_if(s, [](char c) { return c == ' ' || c == '_'; });
  if (s.size() < 2) throw ValidationError("unknown Dynkin type label '" + std::string(label) + "'");
  const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ValidationError("unknown Dynkin type label '" + std::string(label) + "'");
  }
  auto bad = [&] { return ValidationError("unknown Dynkin type label '" + std::string(label) + "'"); };

  auto m = n > 0 ? identity2(n) : std::vector<std::vector<int>>{};
  switch (kind) {
    case 'A':
      if (n < 1) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case 'B':
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      m[n - 2][n - 1] = -2;  // a_n short
      break;
    case 'C':
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      m[n - 1][n - 2] = -2;  // a_n long
      break;
    case 'D':
      if (n < 4) throw bad();
      for (int i = 0; i + 2 < n; ++i) link(m, i, i + 1);
      link(m, n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      link(m, 0, 2);
      link(m, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad();
      link(m, 0, 1);
      link(m, 1, 2);
      link(m, 2, 3);
      m[1][2] = -2;  // a1, a2 long; a3, a4 short
      break;
    case 'G':
      if (n != 2) throw bad();
      m[0][1] = -1;
      m[1][0] = -3;  // a1 short
      break;
    default:
      throw bad();
  }
  return CartanMatrix(std::move(m));
}

std::int64_t CartanMatrix::leading_minor(int k) const {
  // Bareiss fraction-free elimination; exact for integer input.
  std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) a[i].assign(entries_[i].begin(), entries_[i].begin() + k);
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      int swap_row = -1;
      for (int r = p + 1; r < k; ++r)
        if (a[r][p] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[p], a[swap_row]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

// ---------------------------------------------------------------------------
// Root

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_positive() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; }) && !is_zero();
}

bool Root::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const {
  Root r{coords};
  for (auto& c : r.coords) c = -c;
  return r;
}

Root Root::operator+(const Root& other) const {
  Root r{coords};
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += other.coords[i];
  return r;
}

std::string to_string(const Root& root) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < root.coords.size(); ++i) {
    const int c = root.coords[i];
    if (c == 0) continue;
    if (c < 0)
      out << '-';
    else if (!first)
      out << '+';
    if (std::abs(c) != 1) out << std::abs(c);
    out << 'a' << (i + 1);
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

bool canonical_less(const Root& a, const Root& b) {
  const int ha = a.height();
  const int hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coords > b.coords;
}

// ---------------------------------------------------------------------------
// RootSet

std::size_t RootSet::size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<RootId> RootSet::ids() const {
  std::vector<RootId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<RootId>(i));
  return out;
}

bool RootSet::is_subset_of(const RootSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

bool RootSet::is_disjoint_from(const RootSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && other.bits_[i]) return false;
  return true;
}

RootSet RootSet::operator|(const RootSet& other) const {
  RootSet r(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] || other.bits_[i];
  return r;
}

RootSet RootSet::operator&(const RootSet& other) const {
  RootSet r(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] && other.bits_[i];
  return r;
}

RootSet RootSet::operator-(const RootSet& other) const {
  RootSet r(*this);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] && !other.bits_[i];
  return r;
}

// ---------------------------------------------------------------------------
// RootSystem

namespace {

// <a_j,a_j>/2 per simple root, smallest value 1 on each connected component.
RationalVector compute_symmetrizer(const CartanMatrix& c) {
  const int n = c.rank();
  RationalVector e(static_cast<std::size_t>(n), Rational(0));
  for (int start = 0; start < n; ++start) {
    if (e[start] != 0) continue;
    std::vector<int> component{start};
    e[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || c(i, j) == 0) continue;
        // C(i,j) e_j = C(j,i) e_i
        const Rational ej = e[i] * Rational(c(j, i), c(i, j));
        if (e[j] == 0) {
          e[j] = ej;
          component.push_back(j);
          queue.push_back(j);
        } else if (e[j] != ej) {
          throw ValidationError("Cartan matrix is not symmetrizable (cycle through simple roots " +
                                std::to_string(i + 1) + " and " + std::to_string(j + 1) + ")");
        }
      }
    }
    Rational smallest = e[component.front()];
    for (int j : component) smallest = std::min(smallest, e[j]);
    for (int j : component) e[j] /= smallest;
  }
  return e;
}

Root simple_reflect(const CartanMatrix& c, const Root& r, int i) {
  // <r, a_i^vee> = sum_k r_k C(k,i)
  int coroot = 0;
  for (int k = 0; k < c.rank(); ++k) coroot += r.coords[k] * c(k, i);
  Root out = r;
  out.coords[i] -= coroot;
  return out;
}

}  // namespace

RootSystem RootSystem::build(const CartanMatrix& cartan) {
  const int n = cartan.rank();
  for (int k = 1; k <= n; ++k) {
    const auto minor = cartan.leading_minor(k);
    if (minor <= 0)
      throw ValidationError("Cartan matrix is not of finite type: leading principal minor of order " +
                            std::to_string(k) + " equals " + std::to_string(minor));
  }

  RootSystem rs(cartan);
  rs.symmetrizer_ = compute_symmetrizer(cartan);

  // Reflection closure of the simple roots. Heights of finite root systems
  // stay below the Coxeter number (at most 30 for rank 8, 2l in general).
  const int height_bound = 6 * n + 6;
  std::map<std::vector<int>, int> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r{std::vector<int>(static_cast<std::size_t>(n), 0)};
    r.coords[i] = 1;
    seen.emplace(r.coords, 0);
    queue.push_back(std::move(r));
  }
  while (!queue.empty()) {
    Root r = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root s = simple_reflect(cartan, r, i);
      if (std::abs(s.height()) > height_bound)
        throw ValidationError("root generation exceeded the height bound " + std::to_string(height_bound) +
                              "; the Cartan matrix is not of finite type");
      if (seen.emplace(s.coords, 0).second) queue.push_back(std::move(s));
    }
  }

  std::vector<Root> positives;
  for (const auto& [coords, unused] : seen) {
    Root r{coords};
    if (r.is_positive()) positives.push_back(std::move(r));
  }
  std::sort(positives.begin(), positives.end(), canonical_less);
  rs.num_positive_ = static_cast<int>(positives.size());
  rs.roots_ = positives;
  for (const auto& p : positives) rs.roots_.push_back(-p);
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.index_.emplace(rs.roots_[k].coords, static_cast<RootId>(k));

  rs.gram_.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.gram_[i][j] = Rational(cartan(i, j)) * rs.symmetrizer_[j];

  const auto total = static_cast<std::size_t>(rs.num_roots());
  rs.pair_table_.resize(total * total);
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) rs.pair_table_[a * total + b] = rs.pairing(rs.roots_[a], rs.roots_[b]);

  rs.simple_tables_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rs.simple_tables_.push_back(rs.reflection_table(i));
  return rs;
}

std::optional<RootId> RootSystem::find(const Root& r) const {
  const auto it = index_.find(r.coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootId RootSystem::require(const Root& r) const {
  if (static_cast<int>(r.coords.size()) != rank())
    throw ValidationError("root " + to_string(r) + " has " + std::to_string(r.coords.size()) +
                          " coordinates, expected " + std::to_string(rank()));
  if (auto id = find(r)) return *id;
  throw ValidationError(to_string(r) + " is not a root");
}

std::optional<RootId> RootSystem::sum(RootId a, RootId b) const { return find(root(a) + root(b)); }

Rational RootSystem::pairing(const Root& a, const Root& b) const {
  Rational total = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (b.coords[j] != 0) total += gram_[i][j] * (a.coords[i] * b.coords[j]);
  }
  return total;
}

Rational RootSystem::pairing(RootId a, RootId b) const {
  return pair_table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(num_roots()) + static_cast<std::size_t>(b)];
}

int RootSystem::cartan_integer(RootId a, RootId b) const {
  const Rational q = Rational(2) * pairing(a, b) / pairing(b, b);
  if (q.denominator() != 1)
    throw IdentityCheckFailure("non-integral Cartan integer for " + name(a) + ", " + name(b));
  return static_cast<int>(q.numerator());
}

RootId RootSystem::reflect(RootId alpha, RootId beta) const {
  const int k = cartan_integer(alpha, beta);
  Root r = root(alpha);
  const Root& b = root(beta);
  for (int i = 0; i < rank(); ++i) r.coords[i] -= k * b.coords[i];
  return require(r);
}

std::vector<RootId> RootSystem::reflection_table(RootId beta) const {
  std::vector<RootId> table(static_cast<std::size_t>(num_roots()));
  for (RootId a = 0; a < num_roots(); ++a) table[static_cast<std::size_t>(a)] = reflect(a, beta);
  return table;
}

RootSet RootSystem::positive_set() const {
  RootSet s = empty_set();
  for (RootId a = 0; a < num_positive_; ++a) s.insert(a);
  return s;
}

RootSet RootSystem::negative_set() const {
  RootSet s = empty_set();
  for (RootId a = num_positive_; a < num_roots(); ++a) s.insert(a);
  return s;
}

RootSet RootSystem::make_set(std::span<const RootId> ids) const {
  RootSet s = empty_set();
  for (RootId a : ids) s.insert(a);
  return s;
}

bool RootSystem::is_closed(const RootSet& s) const {
  const auto members = s.ids();
  for (RootId a : members)
    for (RootId b : members)
      if (auto c = sum(a, b); c && !s.contains(*c)) return false;
  return true;
}

bool RootSystem::is_symmetric(const RootSet& s) const {
  for (RootId a : s.ids())
    if (!s.contains(negate(a))) return false;
  return true;
}

Rational evaluate_on_coweight(const Root& alpha, std::span<const Rational> coweight) {
  if (alpha.coords.size() != coweight.size())
    throw ValidationError("coweight has " + std::to_string(coweight.size()) + " coordinates, root has " +
                          std::to_string(alpha.coords.size()));
  Rational total = 0;
  for (std::size_t a = 0; a < coweight.size(); ++a) total += coweight[a] * alpha.coords[a];
  return total;
}

Rational evaluate_on_coweight(const RootSystem& rs, RootId alpha, std::span<const Rational> coweight) {
  return evaluate_on_coweight(rs.root(alpha), coweight);
}

}  // namespace bruhatkit
