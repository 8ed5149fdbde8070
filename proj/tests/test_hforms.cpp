#include <doctest.h>

#include <cmath>

#include "lieball/error.hpp"
#include "lieball/hforms.hpp"
#include "lieball/maps.hpp"
#include "lieball/sampling.hpp"

using namespace lieball;

namespace {

HoloExpr z(int i) { return HoloExpr::var(i); }

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// (1 - |z|^2)^p is diagonal on monomials: degree k carries (-1)^k C(p, k) k!/alpha!.
SignatureResult power_signature_oracle(int n, int p) {
  SignatureResult r;
  for (int k = 0; k <= p; ++k) {
    const int count = static_cast<int>(binomial(n + k - 1, k));
    (k % 2 == 0 ? r.positives : r.negatives) += count;
  }
  return r;
}

Point eval_row(const std::vector<HoloExpr>& comps, const Point& p) {
  auto v = evaluate(comps, std::span<const Complex>(p.data(), p.size()));
  return Eigen::Map<const ComplexVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

TEST_SUITE("hforms") {

TEST_CASE("sum of norm squares of the identity") {
  HoloMap f{"id", DomainSpec::unit_ball(2), DomainSpec::type_iv(2), {z(0), z(1)}};
  auto h = form_from_map(f, FormMode::SumNormSquared);
  REQUIRE(h.basis().size() == 2);
  CHECK(max_abs(h.matrix() - ComplexMatrix::Identity(2, 2)) == 0.0);
  CHECK(h.poly() == BiPoly::norm_squared(2));
}

TEST_CASE("flat map kernel collapses to the norm") {
  auto h = form_from_map(catalog_build("flat:n=2,m=4"), FormMode::TypeIVKernel);
  CHECK(h.poly() == BiPoly::norm_squared(2));
}

TEST_CASE("exhp0 kernel form") {
  auto h = form_from_map(catalog_build("exhp0:n=2"), FormMode::TypeIVKernel);
  const BiPoly norm = BiPoly::norm_squared(2);
  const ExactSeries z2sq = expand_polynomial(z(1) * z(1), 2);
  const BiPoly quartic = BiPoly::outer(z2sq, z2sq);
  const BiPoly expected = norm - ExactScalar::rational(1, 4) * quartic * (BiPoly::constant(2, 1) - norm);
  CHECK(h.poly() == expected);
  CHECK(signature(h).negatives >= 1);
}

TEST_CASE("signature examples") {
  const BiPoly n2 = BiPoly::norm_squared(2);
  const BiPoly sq = (BiPoly::constant(2, 1) - n2).pow(2);
  CHECK(signature(HermitianForm(sq)) == SignatureResult{4, 2, 0});
  const BiPoly n1 = BiPoly::norm_squared(1);
  CHECK(signature(HermitianForm((BiPoly::constant(1, 1) - n1).pow(2))) == SignatureResult{2, 1, 0});
  const ExactSeries z1 = expand_polynomial(z(0), 2);
  auto single = signature(HermitianForm(BiPoly::outer(z1, z1)));
  CHECK(single.positives == 1);
  CHECK(single.negatives == 0);
}

TEST_CASE("power signatures match the diagonal count") {
  CHECK(power_signature(2, 2) == SignatureResult{4, 2, 0});
  CHECK(power_signature(1, 2).positives == 2);
  CHECK(power_signature(3, 1) == SignatureResult{1, 3, 0});
  for (int n = 1; n <= 4; ++n)
    for (int p = 1; p <= 4; ++p) {
      CHECK(power_signature(n, p) == power_signature_oracle(n, p));
      if (n >= 2 && p >= 2) CHECK(power_signature(n, p).positives >= 3);
    }
}

TEST_CASE("signature is invariant under unitary mixing of components") {
  Sampler s(51);
  const auto f = catalog_build("exhp0:n=2");
  const auto base = signature(form_from_map(f, FormMode::SumNormSquared));
  const auto base_kernel = signature(form_from_map(f, FormMode::TypeIVKernel));
  for (int i = 0; i < 20; ++i) {
    const auto m = static_cast<int>(f.components.size());
    auto mixed = postcompose_linear(f, s.unitary(m), f.target);
    // Rationalized float entries leave tiny extra monomials, so only the nonzero counts are compared.
    const auto a = signature(form_from_map(mixed, FormMode::SumNormSquared));
    CHECK(a.positives == base.positives);
    CHECK(a.negatives == base.negatives);
    auto rotated = postcompose_linear(f, s.orthogonal(m).cast<Complex>(), f.target);
    const auto b = signature(form_from_map(rotated, FormMode::TypeIVKernel));
    CHECK(b.positives == base_kernel.positives);
    CHECK(b.negatives == base_kernel.negatives);
  }
}

TEST_CASE("forms need polynomial maps") {
  try {
    form_from_map(catalog_build("Izero:n=2"), FormMode::SumNormSquared);
    FAIL("expected NotPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPolynomial);
  }
}

TEST_CASE("hermitian form values agree with the polynomial") {
  Sampler s(52);
  auto h = form_from_map(catalog_build("exhp0:n=2"), FormMode::TypeIVKernel);
  for (int i = 0; i < 20; ++i) {
    Point p = s.polydisc(2, 0.7);
    CHECK(std::abs(h.value(p) - h.poly().value(p).real()) < 1e-12);
    CHECK(std::abs(h.poly().value(p).imag()) < 1e-12);
  }
}

TEST_CASE("D'Angelo unitary recovery") {
  ComplexMatrix perm = dangelo_unitary({z(1), z(0)}, {z(0), z(1)}, 2);
  ComplexMatrix expected(2, 2);
  expected << 0.0, 1.0, 1.0, 0.0;
  CHECK(max_abs(perm - expected) < 1e-12);

  const double r = 1.0 / std::sqrt(2.0);
  std::vector<HoloExpr> f{z(0), HoloExpr::constant(0.0)};
  std::vector<HoloExpr> g{HoloExpr::constant(r) * z(0), HoloExpr::constant(r) * z(0)};
  ComplexMatrix u = dangelo_unitary(f, g, 1);
  CHECK(unitarity_defect(u) < 1e-12);
  Sampler s(53);
  for (int i = 0; i < 10; ++i) {
    Point p = s.polydisc(1, 1.0);
    CHECK((eval_row(g, p).transpose() * u - eval_row(f, p).transpose()).norm() < 1e-12);
  }

  try {
    dangelo_unitary({z(0)}, {HoloExpr::constant(2.0) * z(0)}, 1);
    FAIL("expected NormMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NormMismatch);
  }
}

TEST_CASE("graded lexicographic order") {
  CHECK(graded_lex_less({1, 0}, {2, 0}));
  CHECK(graded_lex_less({2, 0}, {1, 1}));
  CHECK_FALSE(graded_lex_less({0, 2}, {1, 1}));
}

}
