#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieball/domains.hpp"
#include "lieball/expr.hpp"
#include "lieball/groups.hpp"

namespace lieball {

struct HoloMap {
  std::string name;
  DomainSpec source;
  DomainSpec target;
  std::vector<HoloExpr> components;

  int arity() const { return source.dimension(); }
  /// Component count equals target dimension; variables within source arity.
  void validate() const;
};

Point eval(const HoloMap& f, const Point& z, const EvalOptions& opt = {});

/// J(j, a) = d f_a / d z_j, so the linear map z -> z A has Jacobian A.
ComplexMatrix jacobian(const HoloMap& f, const Point& z, const EvalOptions& opt = {});

/// |(1 - |z|^2)^p - (1 - f fbar^t + |f f^t|^2 / 4)| for f: UnitBall(n) -> TypeIV(m).
double kernel_identity_residual(const HoloMap& f, const Point& z, int p);

/// post(f(pre(z))) by substitution of the projective actions into the tree.
HoloMap compose_autos(const std::optional<Automorphism>& pre, const HoloMap& f,
                      const std::optional<Automorphism>& post);

/// Precompose with z -> z V for a unitary V (the source change of coordinates).
HoloMap precompose_linear(const HoloMap& f, const ComplexMatrix& v);
/// Postcompose with F -> F M for an arbitrary constant matrix.
HoloMap postcompose_linear(const HoloMap& f, const ComplexMatrix& m, const DomainSpec& target);

enum class Family { RIV, Itheta, Izero, Lembed, Flat, WhitneyIV, Gk, PsiDegenerate, Exhp0, ClassB };

struct CatalogKey {
  Family family = Family::RIV;
  int n = 2;
  int m = 0;
  int k = 1;
  double theta = 0.0;
  std::optional<HoloExpr> psi;  // PsiDegenerate only; defaults to z_1
};

std::string_view family_name(Family f);
std::vector<std::string> catalog_families();

/// Parses "RIV:n=3", "Itheta:n=2,theta=pi/6", "L:m=5", "flat:n=2,m=4",
/// "whitneyIV:n=3", "Gk:k=2", "Izero:n=3", "psi:m=4,n=2", "exhp0:n=2",
/// "classB:n=3". Errors: ParseError, ParameterOutOfRange.
CatalogKey parse_catalog_key(const std::string& text);
std::string to_string(const CatalogKey& key);

/// Errors: ParameterOutOfRange.
HoloMap catalog_build(const CatalogKey& key);
HoloMap catalog_build(const std::string& key);

/// I_{n,theta} for any theta with cos(2 theta) != 0 (the catalog restricts to [0, pi/4)).
HoloMap itheta_map(int n, double theta);
/// R^IV_n with the last component negated: the rational representative of the
/// two-family statement.
HoloMap riv_flipped(int n);
/// G = (h, 1 - sqrt(1 - sum h_j^2)) for a ball map h: UnitBall(n) -> UnitBall(N);
/// lands in TypeIV(N + 1).
HoloMap sqrt_extension(const HoloMap& h);

/// Accepts decimal radians or [a]pi[/b] forms such as "pi/6", "2pi/3", "-pi/12".
double parse_angle(const std::string& text);

}  // namespace lieball
