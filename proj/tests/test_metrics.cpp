#include <doctest.h>

#include <cmath>
#include <functional>

#include "lieball/error.hpp"
#include "lieball/groups.hpp"
#include "lieball/maps.hpp"
#include "lieball/metrics.hpp"
#include "lieball/sampling.hpp"

using namespace lieball;

namespace {

HoloMap identity_map(const DomainSpec& d) {
  HoloMap f{"id", d, d, {}};
  for (int j = 0; j < d.dimension(); ++j) f.components.push_back(HoloExpr::var(j));
  return f;
}

double log_rho(const DomainSpec& d, const Point& p) { return std::log(defining_values(d, p)[0]); }

double kappa(const DomainSpec& d) {
  switch (d.kind) {
    case DomainKind::UnitBall: return d.n + 1;
    case DomainKind::TypeIV: return d.m;
    default: return 1.0;
  }
}

// -kappa d^2 log(rho) / dz_j dzbar_k by central differences in real coordinates.
ComplexMatrix fd_metric(const DomainSpec& d, const Point& z, double h) {
  const int n = d.dimension();
  auto f = [&](const Point& p) { return log_rho(d, p); };
  auto mixed = [&](const Point& a, const Point& b) {
    if ((a - b).norm() == 0.0) return (f(z + a) - 2.0 * f(z) + f(z - a)) / (h * h);
    return (f(z + a + b) - f(z + a - b) - f(z - a + b) + f(z - a - b)) / (4 * h * h);
  };
  ComplexMatrix g(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Point xj = Point::Zero(n), yj = Point::Zero(n), xk = Point::Zero(n), yk = Point::Zero(n);
      xj(j) = h;
      yj(j) = Complex(0, h);
      xk(k) = h;
      yk(k) = Complex(0, h);
      const Complex ddbar = 0.25 * Complex(mixed(xj, xk) + mixed(yj, yk), mixed(xj, yk) - mixed(yj, xk));
      g(j, k) = -kappa(d) * ddbar;
    }
  return g;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("metric at the origin") {
  for (int n = 1; n <= 4; ++n)
    CHECK(max_abs(metric_matrix(DomainSpec::unit_ball(n), Point::Zero(n)).g - (n + 1.0) * ComplexMatrix::Identity(n, n)) < 1e-14);
  for (int m = 1; m <= 5; ++m)
    CHECK(max_abs(metric_matrix(DomainSpec::type_iv(m), Point::Zero(m)).g - double(m) * ComplexMatrix::Identity(m, m)) < 1e-14);
  ComplexMatrix gb = ComplexMatrix::Identity(3, 3);
  gb(0, 0) = -1.0;
  CHECK(max_abs(metric_matrix(DomainSpec::generalized_ball(2, 1), Point::Zero(3)).g - gb) < 1e-14);
  CHECK_THROWS_AS(metric_matrix(DomainSpec::heisenberg(2), Point::Zero(2)), Error);
}

TEST_CASE("metric matches finite differences of log rho") {
  Sampler s(31);
  for (auto d : {DomainSpec::unit_ball(3), DomainSpec::type_iv(3), DomainSpec::generalized_ball(2, 1)}) {
    for (int i = 0; i < 20; ++i) {
      Point z = s.interior(d, 0.3);
      CHECK(max_abs(metric_matrix(d, z).g - fd_metric(d, z, 1e-4)) < 1e-6);
    }
  }
}

TEST_CASE("pullback examples") {
  for (int m = 2; m <= 4; ++m) {
    const auto f = catalog_build("L:m=" + std::to_string(m));
    const ComplexMatrix pb = pullback_metric(f, Point::Zero(m)).g;
    CHECK(max_abs(pb - ComplexMatrix::Identity(m, m)) < 1e-14);
    CHECK(max_abs(pb - metric_matrix(DomainSpec::type_iv(m), Point::Zero(m)).g / double(m)) < 1e-14);
  }

  HoloMap constant{"c", DomainSpec::unit_ball(2), DomainSpec::type_iv(3),
                   {HoloExpr::constant(0.1), HoloExpr::constant(0.0), HoloExpr::constant(0.2)}};
  Point z(2);
  z << 0.1, 0.2;
  CHECK(max_abs(pullback_metric(constant, z).g) == 0.0);
  CHECK(max_abs(pullback_metric(catalog_build("Izero:n=2"), z).g - metric_matrix(DomainSpec::unit_ball(2), z).g) < 1e-9);
}

TEST_CASE("isometry verdicts") {
  auto riv = isometry_check(catalog_build("RIV:n=3"), 1.0);
  CHECK(riv.pass);
  CHECK(riv.max_residual < 1e-9);

  auto gk = isometry_check(catalog_build("Gk:k=2"), 1.0);
  CHECK_FALSE(gk.pass);
  CHECK(gk.max_residual > 1e-3);

  auto wh = isometry_check(catalog_build("whitneyIV:n=3"), 1.5);
  CHECK_FALSE(wh.pass);
  CHECK(wh.max_residual >= 1e-3);
}

TEST_CASE("isometry verdicts are seed-deterministic") {
  IsometryOptions opt;
  opt.seed = 42;
  opt.samples = 30;
  auto a = isometry_check(catalog_build("Itheta:n=2,theta=pi/12"), 1.0, opt);
  auto b = isometry_check(catalog_build("Itheta:n=2,theta=pi/12"), 1.0, opt);
  CHECK(a.max_residual == b.max_residual);
  CHECK(a.pass);
}

TEST_CASE("isometry and kernel identity agree") {
  Sampler s(33);
  struct Case {
    const char* key;
    double lambda;
    int p;
  };
  for (const Case& c : {Case{"RIV:n=3", 1.0, 1}, Case{"Izero:n=2", 1.0, 1}, Case{"Gk:k=2", 2.0, 2},
                        Case{"Gk:k=1", 1.0, 1}, Case{"whitneyIV:n=2", 1.0, 1}}) {
    const auto f = catalog_build(c.key);
    IsometryOptions opt;
    opt.samples = 50;
    const bool iso = isometry_check(f, c.lambda, opt).pass;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) worst = std::max(worst, kernel_identity_residual(f, s.interior(f.source, 0.9), c.p));
    CHECK_MESSAGE(iso == (worst < 1e-8), c.key);
  }
}

TEST_CASE("expected constants and feasibility") {
  CHECK(expected_lambda(4, 5) == std::vector<double>{1.0});
  CHECK(expected_lambda(1, 2) == std::vector<double>{1.0, 2.0});
  CHECK(expected_lambda(2, 3) == std::vector<double>{1.0});
  CHECK(isometry_dimension_feasible(3, 4));
  CHECK_FALSE(isometry_dimension_feasible(4, 4));
  CHECK(isometry_dimension_feasible(1, 2));
}

TEST_CASE("metric invariance under automorphisms") {
  Sampler s(34);
  for (auto d : {DomainSpec::unit_ball(2), DomainSpec::type_iv(3), DomainSpec::generalized_ball(2, 1)}) {
    const auto a = random_automorphism(d, s);
    const auto f = compose_autos(std::nullopt, identity_map(d), a);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
      Point z = s.interior(d, 0.6);
      MetricMatrix pb;
      try {
        pb = pullback_metric(f, z);
      } catch (const Error&) {
        continue;  // image outside the generalized ball's chart
      }
      CHECK(metric_residual(pb.g, metric_matrix(d, z).g) < 1e-8);
      ++checked;
    }
    CHECK(checked > 100);
  }
}

TEST_CASE("properness verdicts") {
  auto wh = proper_check(catalog_build("whitneyIV:n=3"));
  CHECK(wh.pass);
  CHECK(wh.boundary_residual <= 1e-9);
  CHECK(proper_check(catalog_build("RIV:n=2")).pass);
  CHECK(proper_check(catalog_build("Gk:k=2")).pass);
  HoloMap shrink{"half", DomainSpec::unit_ball(2), DomainSpec::type_iv(2),
                 {HoloExpr::constant(0.5) * HoloExpr::var(0), HoloExpr::constant(0.5) * HoloExpr::var(1)}};
  CHECK_FALSE(proper_check(shrink).pass);
  CHECK_THROWS_AS(proper_check(catalog_build("L:m=3")), Error);
}

}
