#include <doctest.h>

#include "lieball/error.hpp"
#include "lieball/jets.hpp"
#include "lieball/maps.hpp"
#include "lieball/sampling.hpp"

using namespace lieball;

namespace {

HoloExpr z(int i) { return HoloExpr::var(i); }
ExactScalar q(long a, long b = 1) { return ExactScalar::rational(a, b); }

HoloMap heis_map(int n, int big_n, std::vector<HoloExpr> comps) {
  return HoloMap{"test", DomainSpec::heisenberg(n), DomainSpec::heisenberg_sig1(big_n), std::move(comps)};
}

}  // namespace

TEST_SUITE("jets") {

TEST_CASE("expansion examples") {
  // n = 2: variables (z1, w) with weights (1, 2).
  auto a = expand(z(0) * z(1), 2, 4);
  REQUIRE(a.terms().size() == 1);
  CHECK(a.weight_of(a.terms().begin()->first) == 3);

  const HoloExpr one = HoloExpr::constant(q(1));
  auto b = expand(one - HoloExpr::sqrt(one - z(0) * z(0)), 2, 6);
  CHECK(b.terms().size() == 3);
  CHECK(b.coefficient({2, 0}) == q(1, 2));
  CHECK(b.coefficient({4, 0}) == q(1, 8));
  CHECK(b.coefficient({6, 0}) == q(1, 16));

  auto c = expand(one / (one - z(0)), 2, 3);
  CHECK(c.terms().size() == 4);
  for (int k = 0; k <= 3; ++k) CHECK(c.coefficient({k, 0}) == q(1));

  try {
    expand(HoloExpr::sqrt(z(0)), 2, 4);
    FAIL("expected NotAnalyticAtOrigin");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnalyticAtOrigin);
  }
}

TEST_CASE("weighted degree is additive on products") {
  const auto w = heisenberg_weights(3);
  CHECK(w == std::vector<int>{1, 1, 2});
  auto a = expand(z(0) * z(2), 3, 12);
  auto b = expand(z(1) * z(2) * z(2), 3, 12);
  auto p = a * b;
  REQUIRE(p.terms().size() == 1);
  CHECK(p.weight_of(p.terms().begin()->first) == 3 + 5);
  CHECK(restricted_weights(3) == std::vector<int>{1, 1, 1, 1, 2});
}

TEST_CASE("restriction to the Heisenberg hypersurface") {
  // w restricted is u + i |z1|^2.
  auto r = restrict_to_heisenberg(expand(z(1), 2, 4));
  CHECK(r.coefficient({0, 0, 1}) == q(1));
  CHECK(r.coefficient({1, 1, 0}) == ExactScalar::imag_unit());
  auto rc = restrict_conjugate(expand(z(1), 2, 4));
  CHECK(rc.coefficient({1, 1, 0}) == -ExactScalar::imag_unit());
}

TEST_CASE("mapping residual examples") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(mapping_residual(heisenberg_embedding(n, n + 1), 8).vanishes());
    CHECK(mapping_residual(heisenberg_psi_map(n, n + 2, z(0) * z(0)), 8).vanishes());
    CHECK(mapping_residual(cayley_transported_embedding(n, n + 2, q(5, 4), q(3, 4)), 8).vanishes());
  }

  auto broken = heis_map(2, 3, {z(0), z(0) * z(0), z(1)});
  auto r = mapping_residual(broken, 8);
  CHECK_FALSE(r.vanishes());
  CHECK(r.first_nonzero() == 4);
  const auto& part = r.parts[4];
  REQUIRE(part.terms().size() == 1);
  CHECK(part.terms().begin()->first == Monomial{2, 2, 0});
  CHECK((part.terms().begin()->second == q(1) || part.terms().begin()->second == q(-1)));
}

TEST_CASE("catalog of jet maps") {
  CHECK(mapping_residual(jet_catalog_build("heis-linear:n=3,N=4"), 8).vanishes());
  CHECK(mapping_residual(jet_catalog_build("heis-psi:n=3,N=5,psi=z1*z2"), 8).vanishes());
  CHECK(mapping_residual(jet_catalog_build("heis-psi:n=3,N=5,psi=w"), 8).vanishes());
  CHECK(mapping_residual(jet_catalog_build("heis-cayley:n=3,N=5"), 8).vanishes());
  CHECK_THROWS_AS(jet_catalog_build("heis-psi:n=3,N=4,psi=z1^2"), Error);
  CHECK_THROWS_AS(jet_catalog_build("heis-nothing:n=3"), Error);
}

TEST_CASE("cayley transport with a nontrivial boost") {
  const auto f = cayley_transported_embedding(3, 5, q(5, 4), q(3, 4));
  CHECK(mapping_residual(f, 8).vanishes());
  CHECK_THROWS_AS(cayley_transported_embedding(3, 5, q(1), q(1)), Error);
}

TEST_CASE("exact vanishing agrees with numerics on the hypersurface") {
  Sampler s(71);
  for (const char* key : {"heis-linear:n=3,N=4", "heis-psi:n=3,N=5,psi=z1^2", "heis-cayley:n=3,N=5"}) {
    const auto f = jet_catalog_build(key);
    REQUIRE(mapping_residual(f, 8).vanishes());
    for (int i = 0; i < 100; ++i) {
      Point p = s.boundary(f.source, 0.1);
      CHECK(std::abs(defining_values(f.target, eval(f, p))[0]) <= 1e-8);
    }
  }
}

TEST_CASE("normal form examples") {
  auto lin = normal_form_check(heisenberg_embedding(3, 4), 8);
  CHECK(lin.mapping_vanishes);
  for (const auto& a : lin.a1) CHECK(a.is_zero());
  for (const auto& p : lin.phi2) CHECK(p.is_zero());
  CHECK(lin.lhs.is_zero());
  CHECK(lin.rhs.is_zero());
  CHECK(lin.constraint_holds);

  auto psi = normal_form_check(heisenberg_psi_map(2, 4, z(0) * z(0)), 8);
  CHECK(psi.mapping_vanishes);
  REQUIRE(psi.phi2.size() == 2);
  CHECK(psi.phi2[0].coefficient({2, 0}) == q(1));
  CHECK(psi.phi2[1].coefficient({2, 0}) == q(1));
  CHECK(psi.rhs.is_zero());
  CHECK(psi.constraint_holds);

  auto bent = normal_form_check(heis_map(2, 3, {z(0) + z(0) * z(1), HoloExpr::constant(q(0)), z(1)}), 8);
  CHECK_FALSE(bent.mapping_vanishes);
  REQUIRE(bent.a1.size() == 1);
  CHECK(bent.a1[0].coefficient({1, 0}) == -(q(2) * ExactScalar::imag_unit()));
  CHECK_FALSE(bent.constraint_holds);
}

TEST_CASE("maps outside the normal form are named") {
  auto f = heis_map(2, 3, {HoloExpr::constant(q(2)) * z(0), HoloExpr::constant(q(0)), z(1)});
  try {
    normal_form_check(f, 8);
    FAIL("expected NotNormalForm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormalForm);
    CHECK(std::string(e.what()).find("component 1") != std::string::npos);
  }
  auto g = heis_map(2, 3, {z(0), HoloExpr::constant(q(0)), z(1) + z(0) * z(0)});
  CHECK_THROWS_AS(normal_form_check(g, 8), Error);
}

TEST_CASE("printing") {
  auto s = expand(z(0) * z(1), 2, 4);
  CHECK(to_string(s, jet_names(2)) == "z1*w");
  CHECK(restricted_names(2) == std::vector<std::string>{"z1", "zb1", "u"});
}

}
