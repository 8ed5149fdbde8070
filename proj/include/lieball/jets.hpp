#pragma once

#include <string>
#include <vector>

#include "lieball/maps.hpp"
#include "lieball/series.hpp"

namespace lieball {

/// Exact jets in (z_1..z_{n-1}, w) with weight(z_i) = 1, weight(w) = 2.
using WeightedSeries = ExactSeries;

std::vector<int> heisenberg_weights(int n);
/// Variables (z_1..z_{n-1}, zbar_1..zbar_{n-1}, u) with weights (1.., 1.., 2).
std::vector<int> restricted_weights(int n);

/// Errors: NotAnalyticAtOrigin, InexactConstant.
WeightedSeries expand(const HoloExpr& e, int n, int order);

/// h(z, u + i|z|^2) and conj(h)(zbar, u - i|z|^2) as polynomials in (z, zbar, u).
ExactSeries restrict_to_heisenberg(const WeightedSeries& h);
ExactSeries restrict_conjugate(const WeightedSeries& h);

struct MappingResidual {
  int order = 0;
  std::vector<ExactSeries> parts;  // parts[k]: weighted degree k

  bool vanishes() const;
  /// Lowest weighted degree with a nonzero part; -1 if none.
  int first_nonzero() const;
};

/// rho(F, Fbar) = -(g - gbar)/(2i) + sum_{j<N-1} |F_j|^2 - |F_{N-1}|^2 on w = u + i|z|^2.
/// Errors: DomainMismatch, NotAnalyticAtOrigin.
MappingResidual mapping_residual(const HoloMap& f, int order);

struct NormalFormReport {
  bool mapping_vanishes = false;
  std::vector<ExactSeries> a1;    // a^(1)(z), one linear form per f component
  std::vector<ExactSeries> phi2;  // weighted degree 2 part of each phi component
  bool phi2_depends_on_w = false;
  ExactSeries lhs;                // <a1(z), zbar> |z|^2
  ExactSeries rhs;                // <phi2, conj(phi2)>_1
  bool constraint_holds = false;
};

/// f = z + (i/2) a^(1)(z) w + o(3), phi = phi^(2) + o(2), g = w + o(4).
/// Errors: NotNormalForm naming the first violating jet.
NormalFormReport normal_form_check(const HoloMap& f, int order);

/// (z, 0, ..., 0, w): Heisenberg(n) -> HeisenbergSig1(N).
HoloMap heisenberg_embedding(int n, int big_n);
/// (z, 0, ..., 0, psi, psi, w): Heisenberg(n) -> HeisenbergSig1(N), N >= n + 2.
HoloMap heisenberg_psi_map(int n, int big_n, const HoloExpr& psi);
/// Cayley transform, linear embedding of the ball, boost (c, s) on the (eta, 1) plane, inverse Cayley.
/// Errors: ParameterOutOfRange unless c^2 - s^2 = 1.
HoloMap cayley_transported_embedding(int n, int big_n, const ExactScalar& c, const ExactScalar& s);

/// "heis-linear:n=3,N=4", "heis-psi:n=3,N=5,psi=z1^2" (psi in z1^2, z1*z2, w),
/// "heis-cayley:n=3,N=5". Errors: ParseError, ParameterOutOfRange.
HoloMap jet_catalog_build(const std::string& key);

std::string to_string(const ExactSeries& s, const std::vector<std::string>& names);
std::vector<std::string> restricted_names(int n);
std::vector<std::string> jet_names(int n);

}  // namespace lieball
