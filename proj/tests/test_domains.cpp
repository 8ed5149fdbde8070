#include <doctest.h>

#include <cmath>

#include "lieball/domains.hpp"
#include "lieball/error.hpp"
#include "lieball/groups.hpp"
#include "lieball/sampling.hpp"

using namespace lieball;

namespace {

Point pt(std::initializer_list<Complex> xs) {
  Point p(static_cast<int>(xs.size()));
  int i = 0;
  for (auto x : xs) p(i++) = x;
  return p;
}

}  // namespace

TEST_SUITE("domains") {

TEST_CASE("defining values") {
  auto v = defining_values(DomainSpec::type_iv(2), pt({0.5, 0.0}));
  REQUIRE(v.size() == 2);
  CHECK(v[0] == doctest::Approx(0.765625).epsilon(1e-15));
  CHECK(v[1] == doctest::Approx(1.75).epsilon(1e-15));

  for (int m = 1; m <= 5; ++m) {
    auto o = defining_values(DomainSpec::type_iv(m), Point::Zero(m));
    CHECK(o[0] == 1.0);
    CHECK(o[1] == 2.0);
  }

  auto h = defining_values(DomainSpec::heisenberg_sig1(4), Point::Zero(4));
  REQUIRE(h.size() == 1);
  CHECK(h[0] == 0.0);
}

TEST_CASE("point classification") {
  CHECK(classify_point(DomainSpec::type_iv(3), pt({1.0, 1.0, 0.0})).tag == BoundaryTag::SingularBoundary);
  CHECK(classify_point(DomainSpec::type_iv(2), Point::Zero(2)).tag == BoundaryTag::Interior);
  CHECK(classify_point(DomainSpec::unit_ball(2), pt({1.0, 0.0})).tag == BoundaryTag::SmoothBoundary);
  CHECK(classify_point(DomainSpec::unit_ball(2), pt({1.0, 1.0})).tag == BoundaryTag::Exterior);
  CHECK(is_interior(DomainSpec::generalized_ball(2, 1), pt({2.0, 1.5, 1.5})));
}

TEST_CASE("type IV classification is a partition") {
  Sampler s(5);
  const auto d = DomainSpec::type_iv(3);
  int interior = 0, boundary = 0, exterior = 0;
  for (int i = 0; i < 500; ++i) {
    Point p = s.polydisc(3, 1.2);
    if (i % 3 == 0) p = s.type_iv_smooth_boundary(3);
    auto c = classify_point(d, p, 1e-9);
    const auto v = defining_values(d, p);
    switch (c.tag) {
      case BoundaryTag::Interior:
        ++interior;
        CHECK((v[0] > 0 && v[1] > 0));
        break;
      case BoundaryTag::SmoothBoundary:
      case BoundaryTag::SingularBoundary:
        ++boundary;
        CHECK(std::abs(v[0]) <= 1e-9);
        break;
      case BoundaryTag::Exterior: ++exterior; break;
    }
  }
  CHECK(interior > 0);
  CHECK(boundary > 0);
  CHECK(exterior > 0);
}

TEST_CASE("smooth boundary is preserved by the group") {
  Sampler s(9);
  for (int m = 2; m <= 4; ++m) {
    const auto d = DomainSpec::type_iv(m);
    auto a = random_automorphism(d, s);
    for (int i = 0; i < 1000; ++i) {
      Point z = s.type_iv_smooth_boundary(m);
      Point img = apply_automorphism(a, z);
      CHECK(std::abs(defining_values(d, img)[0]) < 1e-8);
    }
  }
}

TEST_CASE("cayley transform examples") {
  const auto h = DomainSpec::heisenberg(3);
  Point a = cayley(h, Point::Zero(3));
  CHECK(std::abs(a(0)) == 0.0);
  CHECK(std::abs(a(2) - 1.0) < 1e-15);
  Point b = cayley(h, pt({0.0, 0.0, Complex(0, 1)}));
  CHECK(b.norm() < 1e-15);
  CHECK(cayley_target(h) == DomainSpec::unit_ball(3));
  CHECK(cayley_target(DomainSpec::heisenberg_sig1(4)) == DomainSpec::generalized_ball(3, 1));
}

TEST_CASE("cayley identity on both models") {
  Sampler s(21);
  for (auto h : {DomainSpec::heisenberg(3), DomainSpec::heisenberg_sig1(4)}) {
    const auto target = cayley_target(h);
    for (int i = 0; i < 200; ++i) {
      Point p = s.polydisc(h.dimension(), 0.6);
      const Complex w = p(h.dimension() - 1);
      const double rho = defining_values(h, p)[0];
      Point q = cayley(h, p);
      const double lhs = defining_values(target, q)[0];
      CHECK(std::abs(lhs - 4.0 * rho / std::norm(1.0 - Complex(0, 1) * w)) < 1e-12);
      CHECK((inverse_cayley(h, q) - p).norm() < 1e-10);
    }
  }
}

TEST_CASE("cayley sig1 example with v = |z|^2_1 + 0.1") {
  const auto h = DomainSpec::heisenberg_sig1(4);
  Point p = pt({0.2, Complex(0.1, 0.3), 0.25, 0.0});
  const double form = std::norm(p(0)) + std::norm(p(1)) - std::norm(p(2));
  p(3) = Complex(0.05, form + 0.1);
  Point q = cayley(h, p);
  const double expected = 0.4 / std::norm(1.0 - Complex(0, 1) * p(3));
  CHECK(defining_values(cayley_target(h), q)[0] == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("invalid domains") {
  CHECK_THROWS_AS(DomainSpec::unit_ball(0).validate(), Error);
  CHECK_THROWS_AS(DomainSpec::heisenberg_sig1(1).validate(), Error);
}

}
