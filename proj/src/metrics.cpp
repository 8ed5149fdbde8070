#include "lieball/metrics.hpp"

#include <cmath>

#include "lieball/error.hpp"
#include "lieball/sampling.hpp"

namespace lieball {

double metric_exponent(const DomainSpec& d) {
  switch (d.kind) {
    case DomainKind::UnitBall: return d.n + 1;
    case DomainKind::TypeIV: return d.m;
    case DomainKind::GeneralizedBall: return 1.0;
    default: break;
  }
  throw Error(ErrorCode::DomainMismatch, d.to_string() + " carries no metric");
}

MetricMatrix metric_matrix(const DomainSpec& d, const Point& z) {
  const double kappa = metric_exponent(d);
  if (!is_interior(d, z)) throw Error(ErrorCode::NotInterior, "metric at a non-interior point of " + d.to_string());
  const auto dim = z.size();
  const double rho = defining_values(d, z).front();
  // rho_j (holomorphic derivative) and the mixed Hessian rho_{j kbar}.
  ComplexVector rj(dim);
  ComplexMatrix rjk = ComplexMatrix::Zero(dim, dim);
  switch (d.kind) {
    case DomainKind::UnitBall:
      rj = -z.conjugate();
      rjk.diagonal().setConstant(-1.0);
      break;
    case DomainKind::TypeIV: {
      const Complex q = (z.transpose() * z)(0, 0);
      rj = -z.conjugate() + 0.5 * std::conj(q) * z;
      rjk = z * z.adjoint();
      rjk.diagonal().array() -= 1.0;
      break;
    }
    case DomainKind::GeneralizedBall:
      for (Eigen::Index j = 0; j < dim; ++j) {
        const double s = j < d.l ? 1.0 : -1.0;
        rj(j) = s * std::conj(z(j));
        rjk(j, j) = s;
      }
      break;
    default: break;
  }
  // rho_{kbar} = conj(rho_k)
  const ComplexMatrix g = kappa * (rj * rj.adjoint() / (rho * rho) - rjk / rho);
  return {z, g};
}

MetricMatrix pullback_metric(const HoloMap& f, const Point& z) {
  const Point w = eval(f, z);
  if (!is_interior(f.target, w)) throw Error(ErrorCode::TargetNotInterior, "image is not interior to " + f.target.to_string());
  const ComplexMatrix j = jacobian(f, z);
  const ComplexMatrix g = metric_matrix(f.target, w).g;
  return {z, j * g * j.adjoint()};
}

IsometryVerdict isometry_check(const HoloMap& f, double lambda, const IsometryOptions& opt) {
  if (opt.samples < 1) throw Error(ErrorCode::ParameterOutOfRange, "samples must be >= 1");
  metric_exponent(f.source);
  IsometryVerdict v;
  v.lambda = lambda;
  v.seed = opt.seed;
  v.tol = opt.tol;
  Sampler sampler(opt.seed);
  const int cap = 10 * opt.samples;
  int attempts = 0;
  while (v.samples < opt.samples && attempts < cap) {
    ++attempts;
    const Point z = sampler.interior(f.source, opt.radius);
    try {
      const ComplexMatrix pb = pullback_metric(f, z).g;
      const ComplexMatrix src = metric_matrix(f.source, z).g;
      v.max_residual = std::max(v.max_residual, metric_residual(pb, lambda * src));
      v.max_abs_residual = std::max(v.max_abs_residual, max_abs(pb - lambda * src));
      ++v.samples;
    } catch (const Error&) {
      ++v.skipped;
    }
  }
  v.pass = v.samples == opt.samples && v.max_residual <= opt.tol;
  return v;
}

double metric_residual(const ComplexMatrix& pullback, const ComplexMatrix& scaled_source) {
  return max_abs(pullback - scaled_source) / std::max(1.0, max_abs(scaled_source));
}

std::vector<double> expected_lambda(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::ParameterOutOfRange, "expected_lambda needs n, m >= 1");
  if (n == 1) return {m / 2.0, static_cast<double>(m)};
  return {static_cast<double>(m) / (n + 1)};
}

bool isometry_dimension_feasible(int n, int m) { return n <= m - 1; }

ProperVerdict proper_check(const HoloMap& f, const ProperOptions& opt) {
  if (opt.samples < 1) throw Error(ErrorCode::ParameterOutOfRange, "samples must be >= 1");
  if (f.source.kind != DomainKind::UnitBall)
    throw Error(ErrorCode::DomainMismatch, "proper_check needs a UnitBall source, got " + f.source.to_string());
  ProperVerdict v;
  v.seed = opt.seed;
  v.tol = opt.tol;
  Sampler sampler(opt.seed);
  const int cap = 10 * opt.samples;
  int attempts = 0;
  while (v.samples < opt.samples && attempts < cap) {
    ++attempts;
    const Point z = sampler.sphere(f.source.n);
    try {
      const Point w = eval(f, z);
      v.boundary_residual = std::max(v.boundary_residual, std::abs(defining_values(f.target, w).front()));
      ++v.samples;
    } catch (const Error&) {
      ++v.skipped;
    }
  }
  for (int k = 0; k < opt.samples; ++k) {
    const Point z = sampler.interior(f.source, 0.9);
    try {
      if (!is_interior(f.target, eval(f, z))) ++v.interior_failures;
    } catch (const Error&) {
      ++v.interior_failures;
    }
  }
  v.pass = v.samples == opt.samples && v.boundary_residual <= opt.tol && v.interior_failures == 0;
  return v;
}

}  // namespace lieball
