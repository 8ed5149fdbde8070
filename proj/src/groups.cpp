#include "lieball/groups.hpp"

#include <cmath>
#include <sstream>

#include "lieball/error.hpp"

namespace lieball {

namespace {

const Complex kI(0.0, 1.0);

ComplexVector lift_vector(const Point& z) {
  const auto m = z.size();
  const Complex q = (z.transpose() * z)(0, 0);
  ComplexVector l(m + 2);
  l.head(m) = z;
  l(m) = (1.0 + 0.5 * q) / std::sqrt(2.0);
  l(m + 1) = (1.0 - 0.5 * q) / (kI * std::sqrt(2.0));
  return l;
}

}  // namespace

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::BallAut: return "BallAut";
    case GroupKind::GeneralizedBallAut: return "GeneralizedBallAut";
    case GroupKind::TypeIVAut: return "TypeIVAut";
  }
  return "?";
}

Automorphism::Automorphism(GroupKind kind, int dim_a, int dim_b, ComplexMatrix m, double tol)
    : kind_(kind), a_(dim_a), b_(dim_b), matrix_(std::move(m)) {
  const MembershipResult r = check_group_membership(matrix_, tag(), tol);
  defect_ = r.defect;
  if (!r.member)
  {
    std::ostringstream os;
    os << to_string(kind_) << " defect " << r.defect;
    if (kind_ == GroupKind::TypeIVAut) os << ", det(D) " << r.det_d;
    throw Error(ErrorCode::InvalidElement, os.str());
  }
  if (kind_ == GroupKind::TypeIVAut) matrix_ = matrix_.real().cast<Complex>();
}

Automorphism Automorphism::ball(const ComplexMatrix& m, double tol) {
  return Automorphism(GroupKind::BallAut, static_cast<int>(m.rows()) - 1, 0, m, tol);
}

Automorphism Automorphism::generalized_ball(int n, int l, const ComplexMatrix& m, double tol) {
  DomainSpec::generalized_ball(n, l);
  return Automorphism(GroupKind::GeneralizedBallAut, n, l, m, tol);
}

Automorphism Automorphism::type_iv(const RealMatrix& t, double tol) {
  return Automorphism(GroupKind::TypeIVAut, static_cast<int>(t.rows()) - 2, 0, t.cast<Complex>(), tol);
}

Automorphism Automorphism::for_domain(const DomainSpec& d, const ComplexMatrix& m, double tol) {
  const auto want = d.kind == DomainKind::TypeIV ? d.m + 2 : d.dimension() + 1;
  if (m.rows() != want || m.cols() != want)
    throw Error(ErrorCode::DimensionMismatch, "automorphism matrix size for " + d.to_string());
  switch (d.kind) {
    case DomainKind::UnitBall: return ball(m, tol);
    case DomainKind::GeneralizedBall: return generalized_ball(d.n, d.l, m, tol);
    case DomainKind::TypeIV:
      if (m.imag().cwiseAbs().maxCoeff() > tol)
        throw Error(ErrorCode::InvalidElement, "TypeIV automorphisms are real");
      return type_iv(m.real(), tol);
    default: break;
  }
  throw Error(ErrorCode::DomainMismatch, "no automorphism group for " + d.to_string());
}

Automorphism Automorphism::identity(const DomainSpec& d) {
  const auto size = d.kind == DomainKind::TypeIV ? d.m + 2 : d.dimension() + 1;
  return for_domain(d, ComplexMatrix::Identity(size, size));
}

DomainSpec Automorphism::domain() const {
  switch (kind_) {
    case GroupKind::BallAut: return DomainSpec::unit_ball(a_);
    case GroupKind::GeneralizedBallAut: return DomainSpec::generalized_ball(a_, b_);
    case GroupKind::TypeIVAut: return DomainSpec::type_iv(a_);
  }
  return {};
}

GroupTag Automorphism::tag() const {
  switch (kind_) {
    case GroupKind::BallAut: return GroupTag::ball(a_);
    case GroupKind::GeneralizedBallAut: return GroupTag::generalized_ball(a_, b_);
    case GroupKind::TypeIVAut: return GroupTag::type_iv(a_);
  }
  return {};
}

Automorphism Automorphism::inverse() const {
  Automorphism out = *this;
  out.matrix_ = group_inverse(matrix_, tag());
  out.defect_ = check_group_membership(out.matrix_, tag(), 1.0).defect;
  return out;
}

Automorphism Automorphism::then(const Automorphism& first, const Automorphism& second) {
  if (first.kind_ != second.kind_ || first.a_ != second.a_ || first.b_ != second.b_)
    throw Error(ErrorCode::DomainMismatch, "composing automorphisms of different domains");
  const double tol = std::max(kValidationTol, 10.0 * (first.defect_ + second.defect_) + 1e-12);
  return Automorphism(first.kind_, first.a_, first.b_, first.matrix_ * second.matrix_, tol);
}

HomogeneousLift lift(const Point& z) {
  HomogeneousLift out;
  out.point = z;
  out.lift = lift_vector(z);
  const auto m = z.size();
  const Complex lhs = (z.transpose() * z)(0, 0);
  const Complex rhs = out.lift(m) * out.lift(m) + out.lift(m + 1) * out.lift(m + 1);
  out.residual = std::abs(lhs - rhs);
  return out;
}

Point apply_automorphism(const Automorphism& a, const Point& p, double pole_tol) {
  const DomainSpec d = a.domain();
  if (p.size() != d.dimension()) throw Error(ErrorCode::DimensionMismatch, "point size for " + d.to_string());
  const ComplexMatrix& m = a.matrix();
  switch (a.kind()) {
    case GroupKind::BallAut: {
      ComplexVector row(d.n + 1);
      row.head(d.n) = p;
      row(d.n) = 1.0;
      const ComplexVector y = m.transpose() * row;
      if (std::abs(y(d.n)) <= pole_tol) throw Error(ErrorCode::Pole, "ball action denominator");
      return y.head(d.n) / y(d.n);
    }
    case GroupKind::GeneralizedBallAut: {
      const int dim = d.dimension();
      ComplexVector row(dim + 1);
      row(0) = 1.0;
      row.tail(dim) = p;
      const ComplexVector y = m.transpose() * row;
      if (std::abs(y(0)) <= pole_tol) throw Error(ErrorCode::Pole, "generalized ball action denominator");
      return y.tail(dim) / y(0);
    }
    case GroupKind::TypeIVAut: {
      const int dim = d.m;
      const ComplexVector y = m.transpose() * lift_vector(p);
      const Complex den = (y(dim) + kI * y(dim + 1)) / std::sqrt(2.0);
      if (std::abs(den) <= pole_tol) throw Error(ErrorCode::Pole, "TypeIV action denominator");
      return y.head(dim) / den;
    }
  }
  return p;
}

std::vector<HoloExpr> apply_exprs(const Automorphism& a, std::span<const HoloExpr> p) {
  const DomainSpec d = a.domain();
  const int dim = d.dimension();
  if (static_cast<int>(p.size()) != dim) throw Error(ErrorCode::DimensionMismatch, "expression count");
  const ComplexMatrix& m = a.matrix();
  std::vector<HoloExpr> row;
  const HoloExpr one = HoloExpr::constant(ExactScalar(1));
  switch (a.kind()) {
    case GroupKind::BallAut:
      row.assign(p.begin(), p.end());
      row.push_back(one);
      break;
    case GroupKind::GeneralizedBallAut:
      row.push_back(one);
      row.insert(row.end(), p.begin(), p.end());
      break;
    case GroupKind::TypeIVAut: {
      row.assign(p.begin(), p.end());
      std::vector<HoloExpr> squares;
      for (const auto& e : p) squares.push_back(HoloExpr::pow(e, 2));
      const HoloExpr half_q = HoloExpr::constant(ExactScalar::rational(1, 2)) * HoloExpr::add(squares);
      const ExactScalar inv_sqrt2 = ExactScalar::sqrt2() * ExactScalar::rational(1, 2);
      const ExactScalar inv_isqrt2 = -ExactScalar::imag_unit() * inv_sqrt2;
      row.push_back(HoloExpr::constant(inv_sqrt2) * (one + half_q));
      row.push_back(HoloExpr::constant(inv_isqrt2) * (one - half_q));
      break;
    }
  }
  const auto size = static_cast<int>(row.size());
  std::vector<HoloExpr> y;
  for (int c = 0; c < size; ++c) {
    std::vector<HoloExpr> terms;
    for (int r = 0; r < size; ++r)
      if (m(r, c) != Complex(0.0, 0.0)) terms.push_back(HoloExpr::constant(m(r, c)) * row[r]);
    y.push_back(HoloExpr::add(std::move(terms)));
  }
  std::vector<HoloExpr> out;
  switch (a.kind()) {
    case GroupKind::BallAut:
      for (int j = 0; j < dim; ++j) out.push_back(y[j] / y[dim]);
      break;
    case GroupKind::GeneralizedBallAut:
      for (int j = 0; j < dim; ++j) out.push_back(y[j + 1] / y[0]);
      break;
    case GroupKind::TypeIVAut: {
      const ExactScalar inv_sqrt2 = ExactScalar::sqrt2() * ExactScalar::rational(1, 2);
      const HoloExpr den = HoloExpr::constant(inv_sqrt2) * y[dim] +
                           HoloExpr::constant(ExactScalar::imag_unit() * inv_sqrt2) * y[dim + 1];
      for (int j = 0; j < dim; ++j) out.push_back(y[j] / den);
      break;
    }
  }
  return out;
}

Automorphism ball_aut_to_origin(const Point& p0) {
  const auto n = static_cast<int>(p0.size());
  const double a2 = p0.squaredNorm();
  if (!(a2 < 1.0)) throw Error(ErrorCode::NotInterior, "ball_aut_to_origin needs |p0| < 1");
  ComplexMatrix m = ComplexMatrix::Identity(n + 1, n + 1);
  if (a2 == 0.0) return Automorphism::ball(m);
  const double gamma = 1.0 / std::sqrt(1.0 - a2);
  const ComplexVector a = p0;
  m.topLeftCorner(n, n) += (gamma - 1.0) / a2 * (a.conjugate() * a.transpose());
  m.topRightCorner(n, 1) = -gamma * a.conjugate();
  m.bottomLeftCorner(1, n) = -gamma * a.transpose();
  m(n, n) = gamma;
  return Automorphism::ball(m);
}

Automorphism typeiv_aut_to_origin(const Point& p0) {
  const auto m = static_cast<int>(p0.size());
  const DomainSpec d = DomainSpec::type_iv(m);
  if (!is_interior(d, p0)) throw Error(ErrorCode::NotInterior, "typeiv_aut_to_origin needs an interior point");
  const ComplexVector l = lift_vector(p0);
  const RealMatrix e = GroupTag::type_iv(m).form();
  RealVector x = l.real();
  RealVector y = l.imag();
  // Interior lifts span a negative 2-plane with x, y E-orthogonal of equal length.
  const double xx = x.dot(e * x);
  const double yy = y.dot(e * y);
  if (!(xx < 0.0 && yy < 0.0)) throw Error(ErrorCode::NotInterior, "lift is not negative");
  const RealVector e1 = x / std::sqrt(-xx);
  RealVector e2 = y - e1 * (-(y.dot(e * e1)));
  e2 /= std::sqrt(-e2.dot(e * e2));

  // Rows of S: E-orthonormal positive vectors, then e1, -e2, so S E S^t = E and
  // [0, 1, -i] S is proportional to the lift.
  RealMatrix s(m + 2, m + 2);
  int row = 0;
  for (int k = 0; k < m + 2 && row < m; ++k) {
    RealVector v = RealVector::Unit(m + 2, k);
    for (int pass = 0; pass < 2; ++pass) {
      v += e1 * v.dot(e * e1) + e2 * v.dot(e * e2);
      for (int j = 0; j < row; ++j) v -= s.row(j).transpose() * v.dot(e * s.row(j).transpose());
    }
    const double nv = v.dot(e * v);
    if (nv > 1e-6) s.row(row++) = v.transpose() / std::sqrt(nv);
  }
  if (row != m) throw Error(ErrorCode::NoConvergence, "positive complement");
  s.row(m) = e1.transpose();
  s.row(m + 1) = -e2.transpose();
  return Automorphism::type_iv(e * s.transpose() * e);
}

RealMatrix rotation2(double t) {
  RealMatrix r(2, 2);
  r << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  return r;
}

Automorphism typeiv_isotropy(const RealMatrix& a, const RealMatrix& d) {
  const auto m = a.rows();
  if (a.cols() != m || d.rows() != 2 || d.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "isotropy blocks");
  if ((a.transpose() * a - RealMatrix::Identity(m, m)).cwiseAbs().maxCoeff() > 1e-10)
    throw Error(ErrorCode::InvalidElement, "A is not orthogonal");
  if ((d.transpose() * d - RealMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() > 1e-10 || d.determinant() <= 0.0)
    throw Error(ErrorCode::InvalidElement, "D is not a rotation");
  RealMatrix t = RealMatrix::Zero(m + 2, m + 2);
  t.topLeftCorner(m, m) = a;
  t.bottomRightCorner(2, 2) = d;
  return Automorphism::type_iv(t);
}

Automorphism random_automorphism(const DomainSpec& d, Sampler& sampler) {
  switch (d.kind) {
    case DomainKind::UnitBall: {
      const Automorphism move = ball_aut_to_origin(sampler.interior(d, 0.7)).inverse();
      ComplexMatrix k = ComplexMatrix::Identity(d.n + 1, d.n + 1);
      k.topLeftCorner(d.n, d.n) = sampler.unitary(d.n);
      return Automorphism::then(Automorphism::ball(k), move);
    }
    case DomainKind::TypeIV: {
      const Automorphism move = typeiv_aut_to_origin(sampler.interior(d, 0.7)).inverse();
      const Automorphism k = typeiv_isotropy(sampler.orthogonal(d.m), rotation2(sampler.uniform(0.0, 6.283185307179586)));
      return Automorphism::then(k, move);
    }
    case DomainKind::GeneralizedBall: {
      const int neg = d.l + 1;
      const int size = neg + d.n;
      auto isotropy = [&] {
        ComplexMatrix k = ComplexMatrix::Zero(size, size);
        k.topLeftCorner(neg, neg) = sampler.unitary(neg);
        k.bottomRightCorner(d.n, d.n) = sampler.unitary(d.n);
        return k;
      };
      const double t = sampler.uniform(-1.0, 1.0);
      ComplexMatrix boost = ComplexMatrix::Identity(size, size);
      boost(0, 0) = boost(neg, neg) = std::cosh(t);
      boost(0, neg) = boost(neg, 0) = std::sinh(t);
      return Automorphism::generalized_ball(d.n, d.l, isotropy() * boost * isotropy());
    }
    default:
      throw Error(ErrorCode::DomainMismatch, "no automorphism sampler for " + d.to_string());
  }
}

}  // namespace lieball
