#include "lieball/exact.hpp"

#include <cmath>
#include <sstream>

#include "lieball/error.hpp"

namespace lieball {

namespace {

mpq_class exact_from_double(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::InexactConstant, "non-finite constant");
  mpq_class q;
  q = v;  // GMP converts binary doubles exactly
  q.canonicalize();
  return q;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

std::string q_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

GaussRational GaussRational::inverse() const {
  const mpq_class n = norm();
  if (sgn(n) == 0) throw Error(ErrorCode::Pole, "division by exact zero");
  return {re / n, -im / n};
}

ExactScalar ExactScalar::rational(long num, long den) {
  return from_mpq(mpq_class(num, den));
}

ExactScalar ExactScalar::from_mpq(const mpq_class& re, const mpq_class& im) {
  return ExactScalar(GaussRational(re, im));
}

ExactScalar ExactScalar::imag_unit() { return from_mpq(0, 1); }

ExactScalar ExactScalar::sqrt2() { return ExactScalar(GaussRational(), GaussRational(1, 0)); }

ExactScalar ExactScalar::from_double(double re, double im) {
  return from_mpq(exact_from_double(re), exact_from_double(im));
}

ExactScalar ExactScalar::inverse() const {
  // (a + b r)^{-1} = (a - b r) / (a^2 - 2 b^2); the denominator is nonzero because r is irrational over Q(i).
  const GaussRational den = a_ * a_ - b_ * b_ * mpq_class(2);
  const GaussRational inv = den.inverse();
  return {a_ * inv, -(b_ * inv)};
}

std::complex<double> ExactScalar::to_complex() const {
  const double r2 = std::sqrt(2.0);
  return {a_.re.get_d() + r2 * b_.re.get_d(), a_.im.get_d() + r2 * b_.im.get_d()};
}

std::optional<ExactScalar> ExactScalar::try_sqrt() const {
  if (is_zero()) return ExactScalar();
  if (b_.is_zero()) {
    const GaussRational& a = a_;
    if (sgn(a.im) == 0) {
      const mpq_class& x = a.re;
      const mpq_class ax = sgn(x) < 0 ? mpq_class(-x) : x;
      const ExactScalar unit = sgn(x) < 0 ? imag_unit() : ExactScalar(1);
      if (auto r = rational_sqrt(ax)) return unit * from_mpq(*r);
      if (auto r = rational_sqrt(ax / 2)) return unit * sqrt2() * from_mpq(*r);
      return std::nullopt;
    }
    // Gaussian square: (p + i q)^2 = a  with p = sqrt((|a| + re)/2), q = im / (2p).
    if (auto mod = rational_sqrt(a.norm())) {
      if (auto p = rational_sqrt((*mod + a.re) / 2); p && sgn(*p) != 0) {
        return from_mpq(*p, a.im / (2 * *p));
      }
    }
    return std::nullopt;
  }
  return std::nullopt;
}

namespace {

std::string gauss_str(const GaussRational& g) {
  if (sgn(g.im) == 0) return q_str(g.re);
  const mpq_class mag = abs(g.im);
  const std::string imag = (mag == 1 ? std::string() : q_str(mag)) + "i";
  if (sgn(g.re) == 0) return (sgn(g.im) < 0 ? "-" : "") + imag;
  return "(" + q_str(g.re) + (sgn(g.im) < 0 ? " - " : " + ") + imag + ")";
}

}  // namespace

std::string ExactScalar::to_string() const {
  if (b_.is_zero()) return gauss_str(a_);
  std::string root = b_ == GaussRational{1, 0} ? "sqrt2" : gauss_str(b_) + "*sqrt2";
  if (a_.is_zero()) return root;
  return "(" + gauss_str(a_) + " + " + root + ")";
}

}  // namespace lieball
