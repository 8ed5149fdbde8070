#pragma once

// Exact arithmetic in the number field Q(i, sqrt 2).
//
// Every constant appearing in the catalog maps (1/2, 1/sqrt 2, sqrt(-2)/4,
// 1/(2 sqrt(-2)), ...) lives in this field, so expanding Hermitian forms and
// weighted jets over it keeps the cancellations exact.

#include <complex>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace lieball {

/// Gaussian rational p + i q with p, q in Q.
struct GaussRational {
  mpq_class re{0};
  mpq_class im{0};

  GaussRational() = default;
  GaussRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  mpq_class norm() const { return re * re + im * im; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator*(const GaussRational& a, const mpq_class& s) {
    return {a.re * s, a.im * s};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  GaussRational inverse() const;
};

/// a + b*sqrt(2) with a, b Gaussian rationals.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : a_(mpq_class(v), mpq_class(0)) {}  // NOLINT: implicit integer literals
  ExactScalar(GaussRational a, GaussRational b = {}) : a_(std::move(a)), b_(std::move(b)) {}

  static ExactScalar rational(long num, long den = 1);
  static ExactScalar from_mpq(const mpq_class& re, const mpq_class& im = 0);
  static ExactScalar imag_unit();
  static ExactScalar sqrt2();
  /// Exact rational value of a binary double (every finite double is a dyadic rational).
  static ExactScalar from_double(double re, double im = 0.0);
  static ExactScalar from_complex(std::complex<double> z) { return from_double(z.real(), z.imag()); }

  const GaussRational& rational_part() const { return a_; }
  const GaussRational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_real() const { return sgn(a_.im) == 0 && sgn(b_.im) == 0; }
  ExactScalar conj() const { return {a_.conj(), b_.conj()}; }
  ExactScalar inverse() const;
  std::complex<double> to_complex() const;

  /// Exact square root when it exists inside the supported patterns
  /// (q^2, 2 q^2, -q^2, -2 q^2 for rational q, or Gaussian squares).
  std::optional<ExactScalar> try_sqrt() const;

  std::string to_string() const;

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend ExactScalar operator-(const ExactScalar& x) { return {-x.a_, -x.b_}; }
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r,  r = sqrt 2
    return {x.a_ * y.a_ + x.b_ * y.b_ * mpq_class(2), x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) { return x * y.inverse(); }
  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }
  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

 private:
  GaussRational a_;
  GaussRational b_;
};

}  // namespace lieball
