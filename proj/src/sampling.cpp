#include "lieball/sampling.hpp"

#include <cmath>
#include <numbers>

#include "lieball/error.hpp"

namespace lieball {

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

double Sampler::normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }

Complex Sampler::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

Point Sampler::polydisc(int dim, double radius) {
  Point p(dim);
  for (int j = 0; j < dim; ++j) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    const double phi = uniform(-std::numbers::pi, std::numbers::pi);
    p(j) = std::polar(r, phi);
  }
  return p;
}

Point Sampler::interior(const DomainSpec& d, double radius, int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    Point p = polydisc(d.dimension(), radius);
    if (is_interior(d, p)) return p;
  }
  throw Error(ErrorCode::NoConvergence, "rejection sampling found no interior point of " + d.to_string());
}

Point Sampler::sphere(int n) {
  Point p(n);
  for (int j = 0; j < n; ++j) p(j) = complex_normal();
  return p / p.norm();
}

Point Sampler::type_iv_smooth_boundary(int m) {
  if (m < 2) throw Error(ErrorCode::ParameterOutOfRange, "TypeIV(1) has no smooth boundary points");
  // Z = e^{i phi} r (a x + i b y) with x, y orthonormal real vectors, a^2 + b^2 = 1, b > 0.
  const RealMatrix q = orthogonal(m);
  const double t = uniform(0.0, std::numbers::pi / 2.0);
  const double a = std::cos(t);
  const double b = std::max(std::sin(t), 1e-3);
  const double nrm = std::hypot(a, b);
  const double c = (a * a - b * b) / (nrm * nrm);
  const double r2 = std::abs(c) < 1e-12 ? 1.0 : 2.0 * (1.0 - std::sqrt(1.0 - c * c)) / (c * c);
  const double r = std::sqrt(r2);
  const Complex phase = std::polar(1.0, uniform(-std::numbers::pi, std::numbers::pi));
  Point z(m);
  for (int j = 0; j < m; ++j) z(j) = phase * r * Complex(a * q(j, 0), b * q(j, 1)) / nrm;
  return z;
}

Point Sampler::boundary(const DomainSpec& d, double radius) {
  switch (d.kind) {
    case DomainKind::UnitBall: return sphere(d.n);
    case DomainKind::TypeIV: return type_iv_smooth_boundary(d.m);
    case DomainKind::GeneralizedBall: {
      Point p(d.dimension());
      const Point w = polydisc(d.l, radius);
      p.head(d.l) = w;
      p.tail(d.n) = std::sqrt(1.0 + w.squaredNorm()) * sphere(d.n);
      return p;
    }
    case DomainKind::Heisenberg:
    case DomainKind::HeisenbergSig1: {
      const int k = d.n - 1;
      Point p(d.n);
      p.head(k) = polydisc(k, radius);
      double h = p.head(k).squaredNorm();
      if (d.kind == DomainKind::HeisenbergSig1) h -= 2.0 * std::norm(p(k - 1));
      p(k) = Complex(uniform(-radius * radius, radius * radius), h);
      return p;
    }
  }
  return {};
}

RealMatrix Sampler::orthogonal(int n) {
  RealMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = normal();
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

ComplexMatrix Sampler::unitary(int n) {
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = complex_normal();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (std::abs(r(j, j)) > 0) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

}  // namespace lieball
