#pragma once

#include <cstdint>
#include <vector>

#include "lieball/domains.hpp"
#include "lieball/maps.hpp"

namespace lieball {

/// g_{j kbar} = -kappa d^2 log(rho) / dz_j dzbar_k with
///   UnitBall(n):        rho = 1 - |z|^2,                   kappa = n + 1
///   TypeIV(m):          rho = 1 - Z Zbar^t + |Z Z^t|^2/4,  kappa = m
///   GeneralizedBall:    rho = 1 + |w|^2 - |z|^2,           kappa = 1
struct MetricMatrix {
  Point base;
  ComplexMatrix g;
};

double metric_exponent(const DomainSpec& d);

/// Errors: NotInterior, DomainMismatch (Heisenberg models carry no metric).
MetricMatrix metric_matrix(const DomainSpec& d, const Point& z);

/// (f^* g)_{j kbar} = sum_{a,b} g_{a bbar}(f(z)) df_a/dz_j conj(df_b/dz_k).
/// Errors: evaluation errors, TargetNotInterior.
MetricMatrix pullback_metric(const HoloMap& f, const Point& z);

struct IsometryOptions {
  int samples = 200;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double radius = 0.9;
};

struct IsometryVerdict {
  double lambda = 0.0;
  int samples = 0;
  int skipped = 0;
  double max_residual = 0.0;      // scaled, see isometry_check
  double max_abs_residual = 0.0;  // unscaled ||f^* g - lambda g||_max
  bool pass = false;
  std::uint64_t seed = 0;
  double tol = 0.0;
};

/// Max over seeded interior samples of
///   ||f^* g_target - lambda g_source||_max / max(1, ||lambda g_source||_max).
/// The unscaled residual is reported alongside.
/// Samples whose evaluation fails are skipped and redrawn, up to 10x the
/// requested count.
IsometryVerdict isometry_check(const HoloMap& f, double lambda, const IsometryOptions& opt = {});

/// {m/(n+1)} for n >= 2, {m/2, m} for n = 1.
std::vector<double> expected_lambda(int n, int m);

/// Scaled discrepancy used by isometry_check.
double metric_residual(const ComplexMatrix& pullback, const ComplexMatrix& scaled_source);

/// n <= m - 1.
bool isometry_dimension_feasible(int n, int m);

struct ProperOptions {
  int samples = 200;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

struct ProperVerdict {
  int samples = 0;
  int skipped = 0;
  double boundary_residual = 0.0;  // max |first target defining value| on sphere samples
  int interior_failures = 0;       // interior samples not mapped to the target interior
  bool pass = false;
  std::uint64_t seed = 0;
  double tol = 0.0;
};

/// Boundary-to-boundary and interior-to-interior check for maps out of UnitBall(n).
/// Sphere points where evaluation fails are skipped and redrawn, up to 10x the count.
/// Errors: DomainMismatch.
ProperVerdict proper_check(const HoloMap& f, const ProperOptions& opt = {});

}  // namespace lieball
