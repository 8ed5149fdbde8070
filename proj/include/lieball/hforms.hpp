#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lieball/exact.hpp"
#include "lieball/linalg.hpp"
#include "lieball/maps.hpp"
#include "lieball/series.hpp"

namespace lieball {

/// Real-analytic polynomial sum c_{ab} z^a zbar^b with exact coefficients.
class BiPoly {
 public:
  using Key = std::pair<Monomial, Monomial>;

  explicit BiPoly(int nvars = 0) : n_(nvars) {}
  static BiPoly constant(int nvars, const ExactScalar& c);
  /// P(z) * conj(Q(z)) for holomorphic polynomials P, Q.
  static BiPoly outer(const ExactSeries& p, const ExactSeries& q);
  /// |z_j|^2 summed over all variables.
  static BiPoly norm_squared(int nvars);

  int nvars() const { return n_; }
  const std::map<Key, ExactScalar>& terms() const { return terms_; }
  void add_term(const Key& k, const ExactScalar& c);
  bool is_zero() const { return terms_.empty(); }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const ExactScalar& s, const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  BiPoly pow(int p) const;

  std::complex<double> value(const Point& z) const;

 private:
  int n_;
  std::map<Key, ExactScalar> terms_;
};

/// Graded lexicographic order: total degree first, then larger exponent of z_1 first, ...
bool graded_lex_less(const Monomial& a, const Monomial& b);

class HermitianForm {
 public:
  /// Errors: NotSymmetric if the coefficients are not Hermitian.
  explicit HermitianForm(const BiPoly& p);

  int nvars() const { return n_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  /// Exact coefficient c_{ab} for basis indices.
  const ExactScalar& coeff(std::size_t a, std::size_t b) const { return coeff_[a][b]; }
  ComplexMatrix matrix() const;
  const BiPoly& poly() const { return poly_; }
  double value(const Point& z) const;

 private:
  int n_;
  BiPoly poly_;
  std::vector<Monomial> basis_;
  std::vector<std::vector<ExactScalar>> coeff_;
};

enum class FormMode { SumNormSquared, TypeIVKernel };

/// sum |f_i|^2, or sum |f_i|^2 - |sum f_i^2|^2 / 4. Errors: NotPolynomial.
HermitianForm form_from_map(const HoloMap& f, FormMode mode);
BiPoly bipoly_from_components(const std::vector<HoloExpr>& comps, int nvars, FormMode mode);

struct SignatureResult {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  friend bool operator==(const SignatureResult&, const SignatureResult&) = default;
};

/// Eigenvalue sign counts; |eig| <= tol * max|eig| counts as zero.
SignatureResult signature(const HermitianForm& h, double tol = kDefaultTol);

/// Signature of (1 - sum_{j<=n} |z_j|^2)^p.
SignatureResult power_signature(int n, int p);

/// Unitary U with f = g U (row vectors of polynomials). Inputs are coefficient
/// matrices: row i holds the coefficients of component i over a shared
/// monomial basis. Errors: NormMismatch when F^H F != G^H G beyond tol,
/// NoSolution when the recovered U fails the residual check.
ComplexMatrix dangelo_unitary(const ComplexMatrix& f_coeffs, const ComplexMatrix& g_coeffs, double tol = 1e-10);
/// Same for polynomial expression lists of equal length.
ComplexMatrix dangelo_unitary(const std::vector<HoloExpr>& f, const std::vector<HoloExpr>& g, int nvars,
                              double tol = 1e-10);

}  // namespace lieball
