#pragma once

#include <span>
#include <string>
#include <vector>

#include "lieball/domains.hpp"
#include "lieball/expr.hpp"
#include "lieball/linalg.hpp"
#include "lieball/sampling.hpp"

namespace lieball {

enum class GroupKind { BallAut, GeneralizedBallAut, TypeIVAut };

std::string_view to_string(GroupKind kind);

/// Validated automorphism acting on row vectors.
///   BallAut(n):              [z, 1] * M,          E = diag(I_n, -1)
///   GeneralizedBallAut(n,l): [1, w, z] * M,       E = diag(-I_{l+1}, I_n)
///   TypeIVAut(m):            lift(Z) * M,         E = diag(I_m, -I_2), det(D) > 0
/// The ball ordering puts the homogenizing coordinate last so the U(n,1)
/// form matches the witness matrix B of the classification.
class Automorphism {
 public:
  static constexpr double kValidationTol = 1e-10;

  static Automorphism ball(const ComplexMatrix& m, double tol = kValidationTol);
  static Automorphism generalized_ball(int n, int l, const ComplexMatrix& m, double tol = kValidationTol);
  static Automorphism type_iv(const RealMatrix& t, double tol = kValidationTol);
  /// Validates against the group of `d` (UnitBall, GeneralizedBall, TypeIV).
  static Automorphism for_domain(const DomainSpec& d, const ComplexMatrix& m, double tol = kValidationTol);
  static Automorphism identity(const DomainSpec& d);

  GroupKind kind() const { return kind_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  DomainSpec domain() const;
  GroupTag tag() const;
  /// Membership defect recorded at construction.
  double defect() const { return defect_; }

  Automorphism inverse() const;
  /// Element acting as `first` followed by `second`.
  static Automorphism then(const Automorphism& first, const Automorphism& second);

 private:
  Automorphism(GroupKind kind, int dim_a, int dim_b, ComplexMatrix m, double tol);
  GroupKind kind_;
  int a_ = 0;  // n for balls, m for TypeIV
  int b_ = 0;  // l for the generalized ball
  ComplexMatrix matrix_;
  double defect_ = 0.0;
};

struct HomogeneousLift {
  Point point;
  ComplexVector lift;  // [Z, (1 + ZZ^t/2)/sqrt 2, (1 - ZZ^t/2)/(i sqrt 2)]
  double residual = 0.0;  // |sum_{j<=m} l_j^2 - l_{m+1}^2 - l_{m+2}^2|
};

HomogeneousLift lift(const Point& z);

/// Image of p. Errors: Pole when the projective denominator vanishes,
/// DimensionMismatch.
Point apply_automorphism(const Automorphism& a, const Point& p, double pole_tol = 1e-12);

/// The same action applied symbolically to expression coordinates.
std::vector<HoloExpr> apply_exprs(const Automorphism& a, std::span<const HoloExpr> p);

/// Ball automorphism sending p0 to the origin. Errors: NotInterior.
Automorphism ball_aut_to_origin(const Point& p0);
/// Type IV automorphism sending an interior point to the origin. Errors: NotInterior.
Automorphism typeiv_aut_to_origin(const Point& p0);
/// blockdiag(A, D) with A orthogonal and D a rotation. Errors: InvalidElement.
Automorphism typeiv_isotropy(const RealMatrix& a, const RealMatrix& d);
/// Planar rotation [[cos t, sin t], [-sin t, cos t]].
RealMatrix rotation2(double t);

/// Seeded automorphism of a UnitBall, GeneralizedBall or TypeIV domain that
/// moves the origin: a transvection composed with random isotropy factors.
/// Errors: DomainMismatch for Heisenberg models.
Automorphism random_automorphism(const DomainSpec& d, Sampler& sampler);

}  // namespace lieball
