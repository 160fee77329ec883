#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bruhatkit/errors.hpp"
#include "bruhatkit/rational.hpp"
#include "bruhatkit/rootsys.hpp"

namespace bruhatkit::lowrank {

// p + i q with p, q exact rationals.
struct Gaussian {
  Rational re{0};
  Rational im{0};

  Gaussian() = default;
  Gaussian(Rational r) : re(r) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i) : re(r), im(i) {}
  Gaussian(std::int64_t r) : re(r) {}  // NOLINT(google-explicit-constructor)

  static Gaussian i() { return {Rational(0), Rational(1)}; }
  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian conj() const { return {re, -im}; }

  Gaussian operator-() const { return {-re, -im}; }
  Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
  Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
  Gaussian operator*(const Gaussian& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Gaussian operator/(const Gaussian& o) const;
  Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
  bool operator==(const Gaussian&) const = default;
};

std::string to_string(const Gaussian& z);

class GaussianMatrix {
 public:
  explicit GaussianMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n)) {}
  GaussianMatrix(std::initializer_list<std::initializer_list<Gaussian>> rows);

  static GaussianMatrix identity(int n);
  static GaussianMatrix diagonal(const std::vector<Gaussian>& d);
  static GaussianMatrix unit(int n, int i, int j);  // E_ij

  int size() const noexcept { return n_; }
  Gaussian& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }
  const Gaussian& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }

  GaussianMatrix operator+(const GaussianMatrix& o) const;
  GaussianMatrix operator-(const GaussianMatrix& o) const;
  GaussianMatrix operator*(const GaussianMatrix& o) const;
  GaussianMatrix operator*(const Gaussian& s) const;
  GaussianMatrix operator-() const { return *this * Gaussian(-1); }
  Gaussian trace() const;
  bool is_zero() const;
  bool operator==(const GaussianMatrix&) const = default;

 private:
  int n_;
  std::vector<Gaussian> data_;
};

// [X, Y] = XY - YX. Throws ValidationError on a shape mismatch.
GaussianMatrix bracket(const GaussianMatrix& x, const GaussianMatrix& y);
// Killing form of sl(n,C): B(X,Y) = 2n tr(XY).
Gaussian killing(const GaussianMatrix& x, const GaussianMatrix& y);
// mu with [T, E] = mu E, if E is an eigenvector of ad T.
std::optional<Gaussian> ad_eigenvalue(const GaussianMatrix& t, const GaussianMatrix& e);

// ---------------------------------------------------------------------------
// sl(2,R) orbits of GL(1,R) x SL(2,R) acting by lambda Ad g.

enum class Sl2Class { K, A, N, O2 };
std::string to_string(Sl2Class c);

// X = [[a, b], [c, -a]]; decided by the sign of det X = -a^2 - bc.
Sl2Class sl2_classify(const Rational& a, const Rational& b, const Rational& c);

template <typename T>
using Mat2 = std::array<std::array<T, 2>, 2>;

Mat2<Rational> sl2_representative(Sl2Class c);

struct Sl2Normalizer {
  Sl2Class tag = Sl2Class::O2;
  double lambda = 1.0;
  Mat2<double> g{};
};

struct ExactSl2Normalizer {
  Sl2Class tag = Sl2Class::O2;
  Rational lambda{1};
  Mat2<Rational> g{};
};

// (lambda, g) with det g = 1 and lambda g X g^{-1} equal to the class
// representative. Throws ValidationError for X = 0.
Sl2Normalizer sl2_normalizer(const Rational& a, const Rational& b, const Rational& c);
// The same certificate in exact arithmetic when every radical involved is rational.
std::optional<ExactSl2Normalizer> sl2_normalizer_exact(const Rational& a, const Rational& b, const Rational& c);

// Largest entrywise deviation of lambda g X g^{-1} from the representative,
// and |det g - 1|.
struct NormalizerCheck {
  double max_entry_error = 0.0;
  double det_error = 0.0;
  bool within(double tol) const { return max_entry_error <= tol && det_error <= tol; }
};
NormalizerCheck check_normalizer(const Rational& a, const Rational& b, const Rational& c, const Sl2Normalizer& n);
bool check_normalizer_exact(const Rational& a, const Rational& b, const Rational& c, const ExactSl2Normalizer& n);

// lambda g X g^{-1} in exact arithmetic; g must be invertible.
Mat2<Rational> sl2_act(const Rational& lambda, const Mat2<Rational>& g, const Mat2<Rational>& x);

// Seeded random verification of one class. Sample k draws from its own
// generator seeded by (seed, class, k), so serial and parallel runs agree.
struct Sl2SampleStats {
  Sl2Class tag = Sl2Class::O2;
  std::size_t samples = 0;
  std::size_t normalizer_passed = 0;   // float certificate within tol (O2: zero stays zero)
  std::size_t exact_checked = 0;       // samples whose radicals were rational
  std::size_t exact_passed = 0;
  std::size_t invariance_passed = 0;   // tag of lambda Ad g(X) equals tag of X
  double max_entry_error = 0.0;
  double max_det_error = 0.0;

  bool ok() const {
    return normalizer_passed == samples && exact_passed == exact_checked && invariance_passed == samples;
  }
};

// A random X of the given class with small rational entries.
Mat2<Rational> sl2_random_element(Sl2Class tag, std::uint64_t seed, std::uint64_t index);
// A random (lambda, g) with lambda != 0 and g in SL(2, Z).
std::pair<Rational, Mat2<Rational>> sl2_random_action(std::uint64_t seed, std::uint64_t index);

Sl2SampleStats sl2_sample_suite(Sl2Class tag, std::size_t count, std::uint64_t seed, double tol = 1e-9,
                                Exec exec = Exec::parallel);

// ---------------------------------------------------------------------------
// su(2,1) with T = diag(i, 0, -i): the six invariant complex structures.

// Element of ad T(g) with real parameters (b, c, x, y, z, w).
GaussianMatrix su21_element(const std::array<Rational, 6>& p);
// Inverse of su21_element on ad T(g); the diagonal is ignored.
std::array<Rational, 6> su21_coordinates(const GaussianMatrix& x);
// j_a for a = 1..6.
GaussianMatrix su21_complex_structure(int a, const GaussianMatrix& x);

// Inertia of a symmetric rational matrix, by congruence diagonalization.
struct Inertia {
  int negatives = 0;
  int positives = 0;
  int zeros = 0;
};
Inertia inertia(std::vector<std::vector<Rational>> m);

struct MetricSignature {
  int index = 0;                            // a in 1..6
  std::vector<std::vector<Rational>> gram;  // g_a(e_i, e_j) on (b, c, x, y, z, w)
  int negatives = 0;
  int positives = 0;
  bool symmetric = false;
  bool nondegenerate = false;
  bool j_squares_to_minus_one = false;
};

struct SignatureReport {
  std::vector<std::vector<Rational>> omega;  // Omega(e_i, e_j)
  bool omega_antisymmetric = false;
  bool omega_nondegenerate = false;
  std::vector<MetricSignature> metrics;      // a = 1..6
};

// Omega from omega(X,Y) = B(T,[X,Y]), B(X,Y) = 6 tr(XY); g_a(X,Y) = Omega(X, j_a Y).
SignatureReport su21_signature_table();

// ---------------------------------------------------------------------------
// sl(3) model of A2 with a1 = e1 - e2, a2 = e2 - e3.

// Z_1 = diag(2,-1,-1)/3, Z_2 = diag(1,1,-2)/3.
GaussianMatrix a2_coweight_matrix(int a);

struct ModelLevel {
  Root root;
  Rational level;  // eigenvalue of ad T on E_ij divided by i
};

// T = i sum_a c_a Z_a; ad T diagonalized on the six root vectors E_ij.
std::vector<ModelLevel> a2_model_levels(const RationalVector& coeffs);

// The six permutations of (e1, e2, e3), as maps on the roots e_i - e_j.
std::vector<std::vector<std::pair<Root, Root>>> a2_model_weyl_actions();

// Roots whose E_ij lies in k_C = s(gl(2) + gl(1)) for the su(2,1) Cartan decomposition.
std::vector<Root> su21_compact_model_roots();

}  // namespace bruhatkit::lowrank
