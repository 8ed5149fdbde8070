#include <doctest.h>

#include <cmath>
#include <numbers>

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

TEST_SUITE("groups") {

TEST_CASE("lift examples") {
  const double r2 = std::sqrt(2.0);
  auto o = lift(Point::Zero(3));
  CHECK(o.lift.head(3).norm() == 0.0);
  CHECK(std::abs(o.lift(3) - 1.0 / r2) < 1e-15);
  CHECK(std::abs(o.lift(4) - 1.0 / Complex(0, r2)) < 1e-15);

  auto e = lift(pt({1.0, 0.0}));
  CHECK(std::abs(e.lift(0) - 1.0) < 1e-15);
  CHECK(std::abs(e.lift(2) - 1.5 / r2) < 1e-15);
  CHECK(std::abs(e.lift(3) - 0.5 / Complex(0, r2)) < 1e-15);
  CHECK(e.residual < 1e-15);

  Sampler s(41);
  for (int i = 0; i < 100; ++i) CHECK(lift(s.polydisc(4, 2.0)).residual < 1e-12);
}

TEST_CASE("apply examples") {
  Sampler s(42);
  const auto d = DomainSpec::type_iv(3);
  Point z = s.interior(d, 0.8);
  CHECK((apply_automorphism(Automorphism::identity(d), z) - z).norm() < 1e-15);

  RealMatrix a = s.orthogonal(3);
  auto iso = typeiv_isotropy(a, RealMatrix::Identity(2, 2));
  CHECK((apply_automorphism(iso, z).transpose() - z.transpose() * a.cast<Complex>()).norm() < 1e-14);
  CHECK(apply_automorphism(iso, Point::Zero(3)).norm() < 1e-15);

  auto rot = typeiv_isotropy(RealMatrix::Identity(3, 3), rotation2(std::numbers::pi / 2));
  CHECK(apply_automorphism(rot, Point::Zero(3)).norm() < 1e-15);
  for (int i = 0; i < 100; ++i) {
    Point b = s.type_iv_smooth_boundary(3);
    CHECK(std::abs(defining_values(d, apply_automorphism(rot, b))[0]) < 1e-8);
  }

  CHECK_THROWS_AS(typeiv_isotropy(RealMatrix::Identity(3, 3), -RealMatrix::Identity(2, 2) * 2.0), Error);
}

TEST_CASE("moving a point to the origin") {
  CHECK(max_abs(ball_aut_to_origin(Point::Zero(2)).matrix() - ComplexMatrix::Identity(3, 3)) < 1e-15);

  auto a = ball_aut_to_origin(pt({0.5, 0.0}));
  CHECK(apply_automorphism(a, pt({0.5, 0.0})).norm() < 1e-12);

  Sampler s(43);
  for (int i = 0; i < 20; ++i) {
    Point p = s.interior(DomainSpec::unit_ball(3), 0.9);
    CHECK(apply_automorphism(ball_aut_to_origin(p), p).norm() < 1e-12);
    Point q = s.interior(DomainSpec::type_iv(3), 0.6);
    CHECK(apply_automorphism(typeiv_aut_to_origin(q), q).norm() < 1e-12);
  }
  try {
    ball_aut_to_origin(pt({1.0, 0.0}));
    FAIL("expected NotInterior");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInterior);
  }
}

TEST_CASE("inverse and composition") {
  Sampler s(44);
  for (auto d : {DomainSpec::unit_ball(3), DomainSpec::type_iv(3), DomainSpec::generalized_ball(2, 1)}) {
    auto a = random_automorphism(d, s);
    auto b = random_automorphism(d, s);
    auto round = Automorphism::then(a, a.inverse());
    auto ab = Automorphism::then(a, b);
    CHECK(ab.defect() <= 10.0 * std::max({a.defect(), b.defect(), 1e-14}));
    CHECK(a.inverse().defect() <= 10.0 * std::max(a.defect(), 1e-14));
    for (int i = 0; i < 50; ++i) {
      Point z = s.interior(d, 0.5);
      try {
        CHECK((apply_automorphism(round, z) - z).norm() < 1e-10);
        CHECK((apply_automorphism(ab, z) - apply_automorphism(b, apply_automorphism(a, z))).norm() < 1e-9);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Pole);
      }
    }
  }
}

TEST_CASE("automorphisms preserve point classes") {
  Sampler s(45);
  for (auto d : {DomainSpec::unit_ball(3), DomainSpec::type_iv(3)}) {
    auto a = random_automorphism(d, s);
    for (int i = 0; i < 200; ++i) {
      Point z = s.interior(d, 0.9);
      CHECK(classify_point(d, apply_automorphism(a, z), 1e-8).tag == BoundaryTag::Interior);
      Point b = s.boundary(d);
      CHECK(classify_point(d, apply_automorphism(a, b), 1e-8).tag == BoundaryTag::SmoothBoundary);
    }
  }
}

TEST_CASE("validation rejects non-members") {
  ComplexMatrix m = ComplexMatrix::Identity(3, 3);
  m(0, 0) = 2.0;
  try {
    Automorphism::ball(m);
    FAIL("expected InvalidElement");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidElement);
  }
  Sampler one(1);
  CHECK_THROWS_AS(random_automorphism(DomainSpec::heisenberg(3), one), Error);
}

}
