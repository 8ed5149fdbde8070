#include <doctest.h>

#include <cmath>

#include "lieball/error.hpp"
#include "lieball/json_io.hpp"
#include "lieball/sampling.hpp"

using namespace lieball;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("matrices and points round trip") {
  Sampler s(81);
  ComplexMatrix m = s.unitary(3);
  CHECK(matrix_from_json(Json::parse(matrix_to_json(m).dump())) == m);
  RealMatrix r = s.orthogonal(2);
  CHECK(matrix_from_json(matrix_to_json(r)) == r.cast<Complex>());
  Point p = s.polydisc(3, 0.5);
  CHECK(point_from_json(point_to_json(p)) == p);
  Point plain = point_from_json(Json::parse("[0.3, 0, 0.4]"));
  CHECK(plain.size() == 3);
  CHECK(plain(2) == Complex(0.4, 0.0));
}

TEST_CASE("domains round trip") {
  for (auto d : {DomainSpec::unit_ball(3), DomainSpec::type_iv(4), DomainSpec::generalized_ball(2, 1),
                 DomainSpec::heisenberg(3), DomainSpec::heisenberg_sig1(5)})
    CHECK(domain_from_json(domain_to_json(d)) == d);
}

TEST_CASE("exact scalars keep their field coordinates") {
  const ExactScalar x = ExactScalar::rational(3, 7) + ExactScalar::imag_unit() * ExactScalar::sqrt2();
  const Json j = exact_to_json(x);
  CHECK(exact_from_json(j) == x);
  CHECK(j.at("re").get<double>() == doctest::Approx(3.0 / 7.0));
  CHECK(j.at("im").get<double>() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("maps round trip through expression trees") {
  Sampler s(82);
  for (const char* key : {"RIV:n=3", "Itheta:n=2,theta=pi/7", "whitneyIV:n=2", "classB:n=2"}) {
    const auto f = catalog_build(key);
    const auto g = map_from_json(Json::parse(map_to_json(f).dump()));
    CHECK(g.source == f.source);
    CHECK(g.target == f.target);
    for (int i = 0; i < 10; ++i) {
      Point z = s.interior(f.source, 0.8);
      CHECK((eval(f, z) - eval(g, z)).norm() < 1e-14);
    }
  }
  const auto byname = map_from_json(Json("Izero:n=2"));
  CHECK(byname.target == DomainSpec::type_iv(3));
}

TEST_CASE("automorphisms and forms round trip") {
  Sampler s(83);
  const auto a = random_automorphism(DomainSpec::type_iv(3), s);
  const auto b = automorphism_from_json(Json::parse(automorphism_to_json(a).dump()));
  CHECK(b.kind() == a.kind());
  CHECK(max_abs(b.matrix() - a.matrix()) < 1e-15);

  const auto h = form_from_map(catalog_build("exhp0:n=2"), FormMode::TypeIVKernel);
  const auto h2 = form_from_json(Json::parse(form_to_json(h).dump()));
  CHECK(h2.poly() == h.poly());
  CHECK(signature(h2) == signature(h));
}

TEST_CASE("reports") {
  CHECK(to_json(power_signature(2, 2)) == Json::parse(R"({"pos": 4, "neg": 2, "zero": 0})"));
  const auto c = classify_map(catalog_build("Itheta:n=2,theta=0.2618"));
  const Json j = to_json(c);
  CHECK(j.at("case") == "irrational");
  CHECK(j.at("beta").get<double>() == doctest::Approx(0.2618).epsilon(1e-8));
  CHECK(j.at("transforms").is_array());
}

TEST_CASE("schema violations are parse errors") {
  CHECK(code_of([] { matrix_from_json(Json::parse(R"({"rows": 2, "cols": 2, "re": [1, 2, 3]})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { domain_from_json(Json::parse(R"({"kind": "Torus", "n": 2})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { expr_from_json(Json::parse(R"({"exp": []})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_json_file("/nonexistent/file.json"); }) == ErrorCode::ParseError);
}

}
