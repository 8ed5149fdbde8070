#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lieball/error.hpp"
#include "lieball/linalg.hpp"
#include "lieball/sampling.hpp"

using namespace lieball;

namespace {

ComplexMatrix random_symmetric(Sampler& s, int n) {
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = s.complex_normal();
  return (a + a.transpose()) / 2.0;
}

// Singular values from the Hermitian eigenproblem of S^H S.
std::vector<double> oracle_singular_values(const ComplexMatrix& s) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s.adjoint() * s);
  std::vector<double> out;
  for (int i = 0; i < es.eigenvalues().size(); ++i) out.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i))));
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("takagi of the identity") {
  auto r = takagi(ComplexMatrix::Identity(3, 3));
  CHECK(r.lambdas == std::vector<double>{1.0, 1.0, 1.0});
  CHECK(unitarity_defect(r.v) < 1e-12);
  ComplexMatrix d = r.v.transpose() * r.v;
  CHECK((d - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("takagi absorbs a negative sign into a phase") {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(0, 0) = 2.0;
  s(1, 1) = -2.0;
  auto r = takagi(s);
  CHECK(r.lambdas[0] == doctest::Approx(2.0));
  CHECK(r.lambdas[1] == doctest::Approx(2.0));
  ComplexMatrix d = r.v.transpose() * s * r.v;
  CHECK((d - 2.0 * ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("takagi matches singular values and reconstructs") {
  Sampler smp(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    ComplexMatrix s = random_symmetric(smp, n);
    if (trial % 5 == 0) s.col(0).setZero(), s.row(0).setZero();
    auto r = takagi(s);
    auto sv = oracle_singular_values(s);
    REQUIRE(r.lambdas.size() == sv.size());
    for (std::size_t i = 0; i < sv.size(); ++i) CHECK(std::abs(r.lambdas[i] - sv[i]) < 1e-9);
    CHECK(unitarity_defect(r.v) < 1e-9);
    RealVector lam(n);
    for (int i = 0; i < n; ++i) lam(i) = r.lambdas[i];
    ComplexMatrix back = r.v.conjugate() * lam.cast<Complex>().asDiagonal() * r.v.adjoint();
    CHECK(max_abs(back - s) < 1e-9);
  }
}

TEST_CASE("takagi rejects a non-symmetric matrix") {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(0, 1) = 1.0;
  try {
    takagi(s);
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }
}

TEST_CASE("group membership examples") {
  for (auto tag : {GroupTag::ball(3), GroupTag::generalized_ball(2, 1), GroupTag::type_iv(3)}) {
    auto r = check_group_membership(ComplexMatrix::Identity(tag.dim(), tag.dim()), tag);
    CHECK(r.member);
    CHECK(r.defect == 0.0);
  }

  Sampler smp(3);
  const int m = 4;
  RealMatrix t = RealMatrix::Identity(m + 2, m + 2);
  t.topLeftCorner(m, m) = smp.orthogonal(m);
  const double a = 0.4;
  t.bottomRightCorner(2, 2) << std::cos(a), std::sin(a), -std::sin(a), std::cos(a);
  auto iso = check_group_membership(t.cast<Complex>(), GroupTag::type_iv(m));
  CHECK(iso.member);
  CHECK(iso.det_d == doctest::Approx(1.0));

  RealMatrix h = RealMatrix::Identity(m + 2, m + 2);
  const double tt = 0.7;
  h(m - 1, m - 1) = std::cosh(tt);
  h(m - 1, m) = std::sinh(tt);
  h(m, m - 1) = std::sinh(tt);
  h(m, m) = std::cosh(tt);
  auto boost = check_group_membership(h.cast<Complex>(), GroupTag::type_iv(m));
  CHECK(boost.member);
  CHECK(boost.defect < 1e-12);

  RealMatrix flip = RealMatrix::Identity(m + 2, m + 2);
  flip(m + 1, m + 1) = -1.0;
  CHECK_FALSE(check_group_membership(flip.cast<Complex>(), GroupTag::type_iv(m)).member);
}

TEST_CASE("group membership is closed under products and inverses") {
  Sampler smp(11);
  const auto tag = GroupTag::ball(3);
  ComplexMatrix u = ComplexMatrix::Identity(4, 4);
  u.topLeftCorner(3, 3) = smp.unitary(3);
  ComplexMatrix b = ComplexMatrix::Identity(4, 4);
  b(0, 0) = b(3, 3) = std::cosh(0.3);
  b(0, 3) = b(3, 0) = std::sinh(0.3);
  const double d1 = check_group_membership(u, tag).defect;
  const double d2 = check_group_membership(b, tag).defect;
  const double bound = 10.0 * std::max({d1, d2, 1e-15});
  CHECK(check_group_membership(u * b, tag).defect <= bound);
  CHECK(check_group_membership(group_inverse(u * b, tag), tag).defect <= bound);
  CHECK(max_abs(group_inverse(b, tag) * b - ComplexMatrix::Identity(4, 4)) < 1e-12);
}

TEST_CASE("extend_orthonormal_real") {
  std::vector<RealVector> vs{RealVector::Unit(3, 0), RealVector::Unit(3, 1)};
  RealMatrix c = extend_orthonormal_real(vs, 3);
  CHECK((c.col(2) - RealVector::Unit(3, 2)).norm() < 1e-15);

  RealVector v(3);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0;
  std::vector<RealVector> one{v};
  RealMatrix c2 = extend_orthonormal_real(one, 3);
  CHECK((c2.transpose() * c2 - RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((c2.col(0) - v).norm() < 1e-15);

  CHECK(extend_orthonormal_real({}, 2) == RealMatrix::Identity(2, 2));
}

TEST_CASE("extend_orthonormal_complex") {
  ComplexMatrix col(3, 1);
  col << Complex(0, 1) / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0;
  ComplexMatrix u = extend_orthonormal_complex(col, 3);
  CHECK(unitarity_defect(u) < 1e-12);
  CHECK(max_abs(u.col(0) - col) < 1e-15);
}

}
