#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lieball/classify.hpp"
#include "lieball/error.hpp"
#include "lieball/maps.hpp"
#include "lieball/sampling.hpp"

using namespace lieball;

namespace {

constexpr double kPi = std::numbers::pi;

double pointwise_gap(const HoloMap& a, const HoloMap& b, Sampler& s, int samples = 50) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    Point z = s.interior(a.source, 0.8);
    worst = std::max(worst, (eval(a, z) - eval(b, z)).cwiseAbs().maxCoeff());
  }
  return worst;
}

Automorphism ball_rotation(const ComplexMatrix& v) {
  const auto n = v.rows();
  ComplexMatrix m = ComplexMatrix::Identity(n + 1, n + 1);
  m.topLeftCorner(n, n) = v;
  return Automorphism::ball(m);
}

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

TEST_SUITE("classify") {

TEST_CASE("extracting the unitary of Izero") {
  auto r = extract_unitary(catalog_build("Izero:n=2"));
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  expected(0, 0) = 1.0;
  expected(2, 1) = 1.0;
  expected(1, 2) = 1.0;
  CHECK(max_abs(r.u - expected) < 1e-9);
  auto form = normalize_unitary(r.u);
  CHECK(form.tag == CaseTag::Irrational);
  CHECK(std::abs(form.beta) < 1e-8);
}

TEST_CASE("extracting the unitary of RIV gives the rational case") {
  auto r = extract_unitary(catalog_build("RIV:n=2"));
  CHECK(unitarity_defect(r.u) < 1e-9);
  auto form = normalize_unitary(r.u);
  CHECK(form.tag == CaseTag::Rational);
  CHECK(std::abs(form.theta_raw - kPi / 4) < 1e-8);
}

TEST_CASE("extraction preconditions") {
  CHECK(code_of([] { extract_unitary(catalog_build("flat:n=2,m=4")); }) == ErrorCode::NotIsometry);
  HoloMap shifted = catalog_build("Izero:n=2");
  shifted.components[0] = shifted.components[0] + HoloExpr::constant(0.1);
  CHECK(code_of([&] { extract_unitary(shifted); }) == ErrorCode::NotNormalized);
  CHECK(code_of([] { normalize_unitary(2.0 * ComplexMatrix::Identity(3, 3)); }) == ErrorCode::NotUnitary);
}

TEST_CASE("normalizing canonical matrices") {
  auto a = normalize_unitary(canonical_unitary(3, kPi / 3));
  CHECK(a.tag == CaseTag::Irrational);
  CHECK(a.beta == doctest::Approx(kPi / 6).epsilon(1e-10));
  CHECK(a.final_class() == "Itheta");
  auto b = normalize_unitary(canonical_unitary(3, kPi / 4));
  CHECK(b.tag == CaseTag::Rational);
  CHECK(b.final_class() == "RIVflip");
  auto c = normalize_unitary(canonical_unitary(2, kPi / 2));
  CHECK(c.tag == CaseTag::Irrational);
  CHECK(std::abs(c.beta) < 1e-10);
}

TEST_CASE("normalizing a conjugated unitary") {
  Sampler s(61);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 3;
    ComplexMatrix o = ComplexMatrix::Identity(n + 1, n + 1);
    o.topLeftCorner(n + 1, n + 1) = s.orthogonal(n + 1).cast<Complex>();
    const Complex phase = std::polar(1.0, s.uniform(0, 2 * kPi));
    // F -> phase F O on the target and z -> z V on the source keep (z, s) = F U solvable.
    ComplexMatrix v = s.unitary(n);
    ComplexMatrix u = canonical_unitary(n, 0.0);
    ComplexMatrix moved = (phase * o).adjoint() * u;
    moved.leftCols(n) = moved.leftCols(n) * v;
    moved.col(n) *= phase * phase;
    auto form = normalize_unitary(moved);
    CHECK(form.tag == CaseTag::Irrational);
    CHECK(std::abs(form.beta) < 1e-8);
    CHECK(form.final_residual < 1e-8);
    CHECK_FALSE(form.steps.empty());
  }
}

TEST_CASE("reconstruction") {
  Sampler s(62);
  for (int n = 2; n <= 4; ++n) {
    const auto nn = std::to_string(n);
    CHECK(pointwise_gap(reconstruct_map(n, 0.0), catalog_build("Izero:n=" + nn), s) < 1e-10);
    CHECK(pointwise_gap(reconstruct_map(n, kPi / 6), catalog_build("Itheta:n=" + nn + ",theta=pi/6"), s) < 1e-10);
    // The linear case is RIV up to isotropies: same case tag, and replaying RIV's log lands on it.
    const auto lin = reconstruct_map(n, kPi / 4);
    const auto riv = catalog_build("RIV:n=" + nn);
    const auto c = classify_map(riv);
    CHECK(classify_map(lin).form.tag == CaseTag::Rational);
    CHECK(pointwise_gap(replay(riv, c.form.steps), lin, s) < 1e-10);
  }
  CHECK(code_of([] { reconstruct_map(2, 2.0); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("round trip over the grid") {
  for (int n = 2; n <= 4; ++n)
    for (double theta : {0.0, kPi / 12, kPi / 6, kPi / 4, kPi / 3}) {
      auto form = normalize_unitary(extract_unitary(reconstruct_map(n, theta)).u);
      const bool rational = std::abs(theta - kPi / 4) < 1e-12;
      CHECK(form.tag == (rational ? CaseTag::Rational : CaseTag::Irrational));
      const double folded = theta > kPi / 4 ? kPi / 2 - theta : theta;
      if (!rational) CHECK(std::abs(form.beta - folded) < 1e-8);
    }
}

TEST_CASE("witness pairs") {
  auto w0 = equivalence_witness(3, 0.0);
  CHECK(max_abs(w0.b - ComplexMatrix::Identity(4, 4)) < 1e-15);
  CHECK((w0.t - RealMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-15);

  for (int n = 2; n <= 4; ++n)
    for (double theta : {kPi / 12, kPi / 6, 0.7}) {
      auto w = equivalence_witness(n, theta);
      CHECK(check_group_membership(w.b, GroupTag::ball(n), 1e-12).member);
      CHECK(check_group_membership(w.t.cast<Complex>(), GroupTag::type_iv(n + 1), 1e-12).member);
      CHECK(witness_intertwining_residual(w, n, theta, 100, 7) < 1e-9);
    }
  CHECK(code_of([] { equivalence_witness(2, kPi / 4); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("classifying catalog maps") {
  auto a = classify_map(catalog_build("Itheta:n=3,theta=pi/12"));
  CHECK(a.form.tag == CaseTag::Irrational);
  CHECK(a.form.beta == doctest::Approx(kPi / 12).epsilon(1e-9));
  CHECK(a.form.final_class() == "Itheta");
  CHECK(a.witness.has_value());

  auto b = classify_map(catalog_build("RIV:n=3"));
  CHECK(b.form.tag == CaseTag::Rational);
  CHECK(b.form.final_class() == "RIVflip");
  CHECK_FALSE(b.witness.has_value());

  auto c = classify_map(catalog_build("Izero:n=3"));
  CHECK(c.form.tag != b.form.tag);
}

TEST_CASE("classification is invariant under isotropies") {
  Sampler s(63);
  for (const char* key : {"Izero:n=2", "Itheta:n=3,theta=pi/7", "RIV:n=2"}) {
    const auto f = catalog_build(key);
    const auto base = classify_map(f);
    for (int i = 0; i < 5; ++i) {
      const int n = f.source.n;
      auto post = typeiv_isotropy(s.orthogonal(n + 1), rotation2(s.uniform(0, 2 * kPi)));
      auto moved = compose_autos(ball_rotation(s.unitary(n)), f, post);
      auto c = classify_map(moved);
      CHECK(c.form.tag == base.form.tag);
      CHECK(std::abs(c.form.beta - base.form.beta) < 1e-8);
    }
  }
}

TEST_CASE("maps not fixing the origin are moved first") {
  Sampler s(64);
  const auto f = catalog_build("Itheta:n=2,theta=pi/12");
  Point p(2);
  p << 0.2, Complex(0.0, -0.1);
  auto moved = compose_autos(ball_aut_to_origin(p), f, std::nullopt);
  // Full automorphisms may change beta (all irrational maps are equivalent), so only the tag and the log are checked.
  auto c = classify_map(moved);
  CHECK(c.form.steps.front().kind == "origin");
  CHECK(c.form.tag == CaseTag::Irrational);
  CHECK(pointwise_gap(replay(moved, c.form.steps), reconstruct_map(2, c.form.theta_raw), s) < 1e-8);
}

TEST_CASE("replaying the transform log reproduces the normal form") {
  Sampler s(65);
  for (const char* key : {"Izero:n=2", "Itheta:n=3,theta=pi/7", "RIV:n=3"}) {
    const auto f = catalog_build(key);
    auto c = classify_map(f);
    const auto target = reconstruct_map(f.source.n, c.form.theta_raw);
    CHECK(pointwise_gap(replay(f, c.form.steps), target, s) < 1e-8);
  }
}

}
