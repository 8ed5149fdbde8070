#pragma once

#include <string>
#include <vector>

#include "lieball/linalg.hpp"

namespace lieball {

using Point = ComplexVector;

enum class DomainKind { UnitBall, GeneralizedBall, TypeIV, Heisenberg, HeisenbergSig1 };

/// Coordinates per kind:
///   UnitBall(n)          z_1..z_n
///   GeneralizedBall(n,l) w_1..w_l, z_1..z_n   (1 + |w|^2 - |z|^2 > 0)
///   TypeIV(m)            Z_1..Z_m
///   Heisenberg(n)        z_1..z_{n-1}, w
///   HeisenbergSig1(N)    z_1..z_{N-1}, w      (z_{N-1} carries the minus sign)
struct DomainSpec {
  DomainKind kind = DomainKind::UnitBall;
  int n = 0;
  int l = 0;
  int m = 0;

  static DomainSpec unit_ball(int n);
  static DomainSpec generalized_ball(int n, int l);
  static DomainSpec type_iv(int m);
  static DomainSpec heisenberg(int n);
  static DomainSpec heisenberg_sig1(int big_n);

  int dimension() const;
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

enum class BoundaryTag { Interior, SmoothBoundary, SingularBoundary, Exterior };

std::string_view to_string(BoundaryTag tag);

struct BoundaryClass {
  BoundaryTag tag = BoundaryTag::Interior;
  std::vector<double> defining_values;
};

std::vector<double> defining_values(const DomainSpec& d, const Point& p);
BoundaryClass classify_point(const DomainSpec& d, const Point& p, double tol = kDefaultTol);

/// True when every defining value is strictly positive.
bool is_interior(const DomainSpec& d, const Point& p);

/// Cayley transform (z, w) -> (2z/(1 - iw), (1 + iw)/(1 - iw)).
/// Heisenberg(n) lands in UnitBall(n) as (Z_1..Z_{n-1}, W).
/// HeisenbergSig1(N) lands in GeneralizedBall(N-1, 1) as (Z_{N-1}; Z_1..Z_{N-2}, W),
/// i.e. the negative slot first.
Point cayley(const DomainSpec& heisenberg, const Point& p, double tol = 1e-12);
Point inverse_cayley(const DomainSpec& heisenberg, const Point& q, double tol = 1e-12);
DomainSpec cayley_target(const DomainSpec& heisenberg);

}  // namespace lieball
