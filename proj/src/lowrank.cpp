#include "bruhatkit/lowrank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace bruhatkit::lowrank {

// ---------------------------------------------------------------------------
// Gaussian rationals

Gaussian Gaussian::operator/(const Gaussian& o) const {
  const Rational norm = o.re * o.re + o.im * o.im;
  if (norm == 0) throw ValidationError("division by zero Gaussian rational");
  const Gaussian num = *this * o.conj();
  return {num.re / norm, num.im / norm};
}

std::string to_string(const Gaussian& z) {
  if (z.im == 0) return bruhatkit::to_string(z.re);
  std::string im;
  if (z.im == 1) im = "i";
  else if (z.im == -1) im = "-i";
  else im = bruhatkit::to_string(z.im) + "i";
  if (z.re == 0) return im;
  return bruhatkit::to_string(z.re) + (z.im > 0 ? "+" : "") + im;
}

GaussianMatrix::GaussianMatrix(std::initializer_list<std::initializer_list<Gaussian>> rows)
    : n_(static_cast<int>(rows.size())), data_() {
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw ValidationError("GaussianMatrix rows must form a square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

GaussianMatrix GaussianMatrix::identity(int n) {
  GaussianMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GaussianMatrix GaussianMatrix::diagonal(const std::vector<Gaussian>& d) {
  GaussianMatrix m(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

GaussianMatrix GaussianMatrix::unit(int n, int i, int j) {
  GaussianMatrix m(n);
  m(i, j) = 1;
  return m;
}

namespace {

void require_same_shape(const GaussianMatrix& x, const GaussianMatrix& y) {
  if (x.size() != y.size())
    throw ValidationError("matrix shape mismatch: " + std::to_string(x.size()) + "x" + std::to_string(x.size()) +
                          " vs " + std::to_string(y.size()) + "x" + std::to_string(y.size()));
}

}  // namespace

GaussianMatrix GaussianMatrix::operator+(const GaussianMatrix& o) const {
  require_same_shape(*this, o);
  GaussianMatrix r(n_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
  return r;
}

GaussianMatrix GaussianMatrix::operator-(const GaussianMatrix& o) const {
  require_same_shape(*this, o);
  GaussianMatrix r(n_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
  return r;
}

GaussianMatrix GaussianMatrix::operator*(const GaussianMatrix& o) const {
  require_same_shape(*this, o);
  GaussianMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Gaussian& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

GaussianMatrix GaussianMatrix::operator*(const Gaussian& s) const {
  GaussianMatrix r(n_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
  return r;
}

Gaussian GaussianMatrix::trace() const {
  Gaussian t;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool GaussianMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Gaussian& z) { return z.is_zero(); });
}

GaussianMatrix bracket(const GaussianMatrix& x, const GaussianMatrix& y) { return x * y - y * x; }

Gaussian killing(const GaussianMatrix& x, const GaussianMatrix& y) {
  require_same_shape(x, y);
  return (x * y).trace() * Gaussian(2 * x.size());
}

std::optional<Gaussian> ad_eigenvalue(const GaussianMatrix& t, const GaussianMatrix& e) {
  if (e.is_zero()) return std::nullopt;
  const GaussianMatrix image = bracket(t, e);
  for (int i = 0; i < e.size(); ++i)
    for (int j = 0; j < e.size(); ++j) {
      if (e(i, j).is_zero()) continue;
      const Gaussian mu = image(i, j) / e(i, j);
      if (image == e * mu) return mu;
      return std::nullopt;
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// sl(2,R)

std::string to_string(Sl2Class c) {
  switch (c) {
    case Sl2Class::K:
      return "K";
    case Sl2Class::A:
      return "A";
    case Sl2Class::N:
      return "N";
    case Sl2Class::O2:
      return "O2";
  }
  return "?";
}

Sl2Class sl2_classify(const Rational& a, const Rational& b, const Rational& c) {
  const Rational det = -a * a - b * c;
  if (det > 0) return Sl2Class::K;
  if (det < 0) return Sl2Class::A;
  if (a == 0 && b == 0 && c == 0) return Sl2Class::O2;
  return Sl2Class::N;
}

Mat2<Rational> sl2_representative(Sl2Class c) {
  switch (c) {
    case Sl2Class::K:
      return {{{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}}};
    case Sl2Class::A:
      return {{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}};
    case Sl2Class::N:
      return {{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}}};
    case Sl2Class::O2:
      break;
  }
  return {{{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}};
}

namespace {

template <typename T>
Mat2<T> mul(const Mat2<T>& x, const Mat2<T>& y) {
  Mat2<T> r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return r;
}

template <typename T>
T det2(const Mat2<T>& g) {
  return g[0][0] * g[1][1] - g[0][1] * g[1][0];
}

template <typename T>
Mat2<T> inv2(const Mat2<T>& g) {
  const T d = det2(g);
  return {{{g[1][1] / d, -g[0][1] / d}, {-g[1][0] / d, g[0][0] / d}}};
}

double to_double(const Rational& q) { return boost::rational_cast<double>(q); }

// Shear conjugation that makes the lower-left entry nonzero when det X < 0 and c = 0.
Mat2<Rational> shear_for(const Rational& a, const Rational& b) {
  const Rational t = (2 * a - b != 0) ? Rational(1) : Rational(-1);
  return {{{Rational(1), Rational(0)}, {t, Rational(1)}}};
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  auto isqrt = [](std::int64_t v) -> std::optional<std::int64_t> {
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v) return std::nullopt;
    return r;
  };
  const auto n = isqrt(q.numerator());
  const auto d = isqrt(q.denominator());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace

Mat2<Rational> sl2_act(const Rational& lambda, const Mat2<Rational>& g, const Mat2<Rational>& x) {
  Mat2<Rational> y = mul(mul(g, x), inv2(g));
  for (auto& row : y)
    for (auto& v : row) v *= lambda;
  return y;
}

Sl2Normalizer sl2_normalizer(const Rational& a, const Rational& b, const Rational& c) {
  const Sl2Class tag = sl2_classify(a, b, c);
  Sl2Normalizer out;
  out.tag = tag;
  const double ad = to_double(a);
  const double bd = to_double(b);
  const double cd = to_double(c);
  switch (tag) {
    case Sl2Class::O2:
      throw ValidationError("X = 0 has no normalizer");
    case Sl2Class::K: {
      const double det = to_double(-a * a - b * c);
      const double q = std::sqrt(std::sqrt(det));
      if (c > 0) {
        const double sc = std::sqrt(cd);
        out.lambda = 1.0 / std::sqrt(det);
        out.g = {{{sc / q, -ad / (sc * q)}, {0.0, q / sc}}};
      } else {
        const double sc = std::sqrt(-cd);
        out.lambda = -1.0 / std::sqrt(det);
        out.g = {{{sc / q, ad / (sc * q)}, {0.0, q / sc}}};
      }
      return out;
    }
    case Sl2Class::A: {
      if (c == 0) {
        const auto g0 = shear_for(a, b);
        const auto y = sl2_act(Rational(1), g0, {{{a, b}, {c, -a}}});
        auto inner = sl2_normalizer(y[0][0], y[0][1], y[1][0]);
        const Mat2<double> g0d{{{to_double(g0[0][0]), to_double(g0[0][1])}, {to_double(g0[1][0]), to_double(g0[1][1])}}};
        inner.g = mul(inner.g, g0d);
        return inner;
      }
      const double s = std::sqrt(to_double(a * a + b * c));
      out.lambda = -1.0 / s;
      out.g = {{{1.0, -(ad + s) / cd}, {cd / (2.0 * s), (s - ad) / (2.0 * s)}}};
      return out;
    }
    case Sl2Class::N:
      if (c != 0) {
        out.lambda = -1.0 / cd;
        out.g = {{{cd, 1.0 - ad}, {-1.0, ad / cd}}};
      } else {
        out.lambda = 1.0 / bd;
        out.g = {{{1.0, 0.0}, {0.0, 1.0}}};
      }
      return out;
  }
  return out;
}

std::optional<ExactSl2Normalizer> sl2_normalizer_exact(const Rational& a, const Rational& b, const Rational& c) {
  const Sl2Class tag = sl2_classify(a, b, c);
  ExactSl2Normalizer out;
  out.tag = tag;
  switch (tag) {
    case Sl2Class::O2:
      throw ValidationError("X = 0 has no normalizer");
    case Sl2Class::K: {
      const Rational det = -a * a - b * c;
      const auto root = exact_sqrt(det);
      const auto q = root ? exact_sqrt(*root) : std::nullopt;
      const auto sc = exact_sqrt(c > 0 ? c : -c);
      if (!root || !q || !sc) return std::nullopt;
      if (c > 0) {
        out.lambda = 1 / *root;
        out.g = {{{*sc / *q, -a / (*sc * *q)}, {Rational(0), *q / *sc}}};
      } else {
        out.lambda = -1 / *root;
        out.g = {{{*sc / *q, a / (*sc * *q)}, {Rational(0), *q / *sc}}};
      }
      return out;
    }
    case Sl2Class::A: {
      if (c == 0) {
        const auto g0 = shear_for(a, b);
        const auto y = sl2_act(Rational(1), g0, {{{a, b}, {c, -a}}});
        auto inner = sl2_normalizer_exact(y[0][0], y[0][1], y[1][0]);
        if (inner) inner->g = mul(inner->g, g0);
        return inner;
      }
      const auto s = exact_sqrt(a * a + b * c);
      if (!s) return std::nullopt;
      out.lambda = -1 / *s;
      out.g = {{{Rational(1), -(a + *s) / c}, {c / (2 * *s), (*s - a) / (2 * *s)}}};
      return out;
    }
    case Sl2Class::N:
      if (c != 0) {
        out.lambda = -1 / c;
        out.g = {{{c, 1 - a}, {Rational(-1), a / c}}};
      } else {
        out.lambda = 1 / b;
        out.g = {{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
      }
      return out;
  }
  return out;
}

NormalizerCheck check_normalizer(const Rational& a, const Rational& b, const Rational& c, const Sl2Normalizer& n) {
  const Mat2<double> x{{{to_double(a), to_double(b)}, {to_double(c), -to_double(a)}}};
  const Mat2<double> y = mul(mul(n.g, x), inv2(n.g));
  const auto rep = sl2_representative(sl2_classify(a, b, c));
  NormalizerCheck out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.max_entry_error = std::max(out.max_entry_error, std::abs(n.lambda * y[i][j] - to_double(rep[i][j])));
  out.det_error = std::abs(det2(n.g) - 1.0);
  return out;
}

bool check_normalizer_exact(const Rational& a, const Rational& b, const Rational& c, const ExactSl2Normalizer& n) {
  if (det2(n.g) != 1) return false;
  return sl2_act(n.lambda, n.g, {{{a, b}, {c, -a}}}) == sl2_representative(sl2_classify(a, b, c));
}

namespace {

std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 6);
  int p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  return Rational(p, den(rng));
}

constexpr std::uint64_t kActionStream = 0xac7;

}  // namespace

Mat2<Rational> sl2_random_element(Sl2Class tag, std::uint64_t seed, std::uint64_t index) {
  auto rng = sample_engine(seed, static_cast<std::uint64_t>(tag), index);
  const Rational zero(0);
  switch (tag) {
    case Sl2Class::O2:
      return {{{zero, zero}, {zero, zero}}};
    case Sl2Class::N: {
      std::uniform_int_distribution<int> shape(0, 3);
      if (shape(rng) == 0) return {{{zero, zero}, {random_rational(rng, true), zero}}};
      const Rational a = random_rational(rng, false);
      const Rational b = random_rational(rng, true);
      return {{{a, b}, {-a * a / b, -a}}};
    }
    case Sl2Class::K:
    case Sl2Class::A:
      break;
  }
  for (;;) {
    const Rational a = random_rational(rng, false);
    const Rational b = random_rational(rng, false);
    const Rational c = random_rational(rng, false);
    if (sl2_classify(a, b, c) == tag) return {{{a, b}, {c, -a}}};
  }
}

std::pair<Rational, Mat2<Rational>> sl2_random_action(std::uint64_t seed, std::uint64_t index) {
  auto rng = sample_engine(seed, kActionStream, index);
  const Rational lambda = random_rational(rng, true);
  std::uniform_int_distribution<int> step(-3, 3);
  Mat2<Rational> g{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  for (int k = 0; k < 4; ++k) {
    const Rational t(step(rng));
    const Mat2<Rational> e = (k % 2 == 0) ? Mat2<Rational>{{{Rational(1), t}, {Rational(0), Rational(1)}}}
                                          : Mat2<Rational>{{{Rational(1), Rational(0)}, {t, Rational(1)}}};
    g = mul(g, e);
  }
  return {lambda, g};
}

namespace {

struct SampleOutcome {
  bool normalizer_ok = false;
  bool exact_checked = false;
  bool exact_ok = false;
  bool invariant = false;
  double entry_error = 0.0;
  double det_error = 0.0;
};

SampleOutcome run_sample(Sl2Class tag, std::uint64_t seed, std::uint64_t k, double tol) {
  SampleOutcome out;
  const auto x = sl2_random_element(tag, seed, k);
  const Rational &a = x[0][0], &b = x[0][1], &c = x[1][0];
  const auto [lambda, g] = sl2_random_action(seed, k);
  const auto y = sl2_act(lambda, g, x);
  out.invariant = sl2_classify(y[0][0], y[0][1], y[1][0]) == sl2_classify(a, b, c) && y[1][1] == -y[0][0];
  if (tag == Sl2Class::O2) {
    out.normalizer_ok = sl2_classify(a, b, c) == Sl2Class::O2 && y == x;
    return out;
  }
  const auto n = sl2_normalizer(a, b, c);
  const auto check = check_normalizer(a, b, c, n);
  out.entry_error = check.max_entry_error;
  out.det_error = check.det_error;
  out.normalizer_ok = n.tag == tag && check.within(tol);
  if (const auto exact = sl2_normalizer_exact(a, b, c)) {
    out.exact_checked = true;
    out.exact_ok = check_normalizer_exact(a, b, c, *exact);
  }
  return out;
}

}  // namespace

Sl2SampleStats sl2_sample_suite(Sl2Class tag, std::size_t count, std::uint64_t seed, double tol, Exec exec) {
  std::vector<SampleOutcome> outcomes(count);
  const auto total = static_cast<std::int64_t>(count);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t k = 0; k < total; ++k)
      outcomes[static_cast<std::size_t>(k)] = run_sample(tag, seed, static_cast<std::uint64_t>(k), tol);
  } else {
    for (std::int64_t k = 0; k < total; ++k)
      outcomes[static_cast<std::size_t>(k)] = run_sample(tag, seed, static_cast<std::uint64_t>(k), tol);
  }
  Sl2SampleStats stats;
  stats.tag = tag;
  stats.samples = count;
  for (const auto& o : outcomes) {
    stats.normalizer_passed += o.normalizer_ok;
    stats.exact_checked += o.exact_checked;
    stats.exact_passed += o.exact_ok;
    stats.invariance_passed += o.invariant;
    stats.max_entry_error = std::max(stats.max_entry_error, o.entry_error);
    stats.max_det_error = std::max(stats.max_det_error, o.det_error);
  }
  return stats;
}

// ---------------------------------------------------------------------------
// su(2,1)

namespace {

const Gaussian kI = Gaussian::i();

GaussianMatrix su21_torus() { return GaussianMatrix::diagonal({kI, Gaussian(0), -kI}); }

}  // namespace

GaussianMatrix su21_element(const std::array<Rational, 6>& p) {
  const auto& [b, c, x, y, z, w] = p;
  return GaussianMatrix{{Gaussian(0), Gaussian(b, c), Gaussian(-y, x)},
                        {Gaussian(-b, c), Gaussian(0), Gaussian(-w, z)},
                        {Gaussian(-y, -x), Gaussian(-w, -z), Gaussian(0)}};
}

std::array<Rational, 6> su21_coordinates(const GaussianMatrix& m) {
  if (m.size() != 3) throw ValidationError("su(2,1) coordinates need a 3x3 matrix");
  return {m(0, 1).re, m(0, 1).im, m(0, 2).im, -m(0, 2).re, m(1, 2).im, -m(1, 2).re};
}

GaussianMatrix su21_complex_structure(int a, const GaussianMatrix& m) {
  if (a < 1 || a > 6) throw ValidationError("complex structure index must be in 1..6");
  const auto [b, c, x, y, z, w] = su21_coordinates(m);
  const int base = (a + 1) / 2;  // 1, 3, 5 -> 1, 2, 3
  GaussianMatrix out(3);
  // Shared first row/column block.
  out(0, 1) = Gaussian(-c, b);
  out(1, 0) = Gaussian(c, b);
  switch (base) {
    case 1:
      out(0, 2) = Gaussian(-x, -y);
      out(2, 0) = Gaussian(-x, y);
      out(1, 2) = Gaussian(-z, -w);
      out(2, 1) = Gaussian(-z, w);
      break;
    case 2:
      out(0, 2) = Gaussian(-x, -y);
      out(2, 0) = Gaussian(-x, y);
      out(1, 2) = Gaussian(z, w);
      out(2, 1) = Gaussian(z, -w);
      break;
    default:
      out(0, 2) = Gaussian(x, y);
      out(2, 0) = Gaussian(x, -y);
      out(1, 2) = Gaussian(z, w);
      out(2, 1) = Gaussian(z, -w);
      break;
  }
  return a % 2 == 0 ? -out : out;
}

Inertia inertia(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  Inertia out;
  auto swap_index = [&](int p, int q) {
    std::swap(m[p], m[q]);
    for (auto& row : m) std::swap(row[p], row[q]);
  };
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int p = k; p < n; ++p)
      if (m[p][p] != 0) {
        pivot = p;
        break;
      }
    if (pivot < 0) {
      // All remaining diagonal entries vanish; fold a nonzero off-diagonal
      // entry onto the diagonal by the congruence e_i <- e_i + e_j.
      int fi = -1;
      int fj = -1;
      for (int i = k; i < n && fi < 0; ++i)
        for (int j = k; j < n; ++j)
          if (i != j && m[i][j] != 0) {
            fi = i;
            fj = j;
            break;
          }
      if (fi < 0) {
        out.zeros += n - k;
        break;
      }
      for (int c = 0; c < n; ++c) m[fi][c] += m[fj][c];
      for (int r = 0; r < n; ++r) m[r][fi] += m[r][fj];
      pivot = fi;
    }
    swap_index(k, pivot);
    const Rational d = m[k][k];
    (d > 0 ? out.positives : out.negatives) += 1;
    for (int r = k + 1; r < n; ++r) {
      if (m[r][k] == 0) continue;
      const Rational f = m[r][k] / d;
      for (int c = k + 1; c < n; ++c) m[r][c] -= f * m[k][c];
    }
    for (int r = k + 1; r < n; ++r) m[r][k] = m[k][r] = 0;
  }
  return out;
}

SignatureReport su21_signature_table() {
  const GaussianMatrix t = su21_torus();
  std::vector<GaussianMatrix> basis;
  for (int k = 0; k < 6; ++k) {
    std::array<Rational, 6> p{};
    p[static_cast<std::size_t>(k)] = 1;
    basis.push_back(su21_element(p));
  }
  auto omega = [&](const GaussianMatrix& x, const GaussianMatrix& y) {
    const Gaussian v = killing(t, bracket(x, y));
    if (v.im != 0) throw IdentityCheckFailure("omega(X,Y) is not real on su(2,1)");
    return v.re;
  };

  SignatureReport rep;
  rep.omega.assign(6, std::vector<Rational>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) rep.omega[i][j] = omega(basis[i], basis[j]);
  rep.omega_antisymmetric = true;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) rep.omega_antisymmetric = rep.omega_antisymmetric && rep.omega[i][j] == -rep.omega[j][i];
  {
    // Omega is nondegenerate iff Omega^T Omega is positive definite.
    std::vector<std::vector<Rational>> sq(6, std::vector<Rational>(6, Rational(0)));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) sq[i][j] += rep.omega[k][i] * rep.omega[k][j];
    rep.omega_nondegenerate = inertia(sq).positives == 6;
  }

  for (int a = 1; a <= 6; ++a) {
    MetricSignature ms;
    ms.index = a;
    ms.gram.assign(6, std::vector<Rational>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) ms.gram[i][j] = omega(basis[i], su21_complex_structure(a, basis[j]));
    ms.symmetric = true;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) ms.symmetric = ms.symmetric && ms.gram[i][j] == ms.gram[j][i];
    const Inertia in = inertia(ms.gram);
    ms.negatives = in.negatives;
    ms.positives = in.positives;
    ms.nondegenerate = in.zeros == 0;
    ms.j_squares_to_minus_one = std::all_of(basis.begin(), basis.end(), [&](const GaussianMatrix& e) {
      return su21_complex_structure(a, su21_complex_structure(a, e)) == -e;
    });
    rep.metrics.push_back(std::move(ms));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// A2 model

GaussianMatrix a2_coweight_matrix(int a) {
  const Rational third(1, 3);
  if (a == 1) return GaussianMatrix::diagonal({Gaussian(2 * third), Gaussian(-third), Gaussian(-third)});
  if (a == 2) return GaussianMatrix::diagonal({Gaussian(third), Gaussian(third), Gaussian(-2 * third)});
  throw ValidationError("A2 coweight index must be 1 or 2");
}

namespace {

// e_i - e_j on the simple roots e1 - e2, e2 - e3.
Root a2_root(int i, int j) {
  Root r{{0, 0}};
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  for (int k = lo; k < hi; ++k) r.coords[static_cast<std::size_t>(k)] = 1;
  return i < j ? r : -r;
}

}  // namespace

std::vector<ModelLevel> a2_model_levels(const RationalVector& coeffs) {
  if (coeffs.size() != 2) throw ValidationError("the A2 model needs two coweight coefficients");
  const GaussianMatrix t = (a2_coweight_matrix(1) * Gaussian(coeffs[0]) + a2_coweight_matrix(2) * Gaussian(coeffs[1])) * kI;
  std::vector<ModelLevel> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const auto mu = ad_eigenvalue(t, GaussianMatrix::unit(3, i, j));
      if (!mu || mu->re != 0) throw IdentityCheckFailure("E_ij is not an imaginary eigenvector of ad T");
      out.push_back({a2_root(i, j), mu->im});
    }
  std::sort(out.begin(), out.end(), [](const ModelLevel& x, const ModelLevel& y) { return x.root < y.root; });
  return out;
}

std::vector<std::vector<std::pair<Root, Root>>> a2_model_weyl_actions() {
  std::array<int, 3> perm{0, 1, 2};
  std::vector<std::vector<std::pair<Root, Root>>> out;
  do {
    std::vector<std::pair<Root, Root>> action;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) action.emplace_back(a2_root(i, j), a2_root(perm[i], perm[j]));
    std::sort(action.begin(), action.end());
    out.push_back(std::move(action));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Root> su21_compact_model_roots() {
  std::vector<Root> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && (i < 2) == (j < 2)) out.push_back(a2_root(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bruhatkit::lowrank
