#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace lieball {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;

/// Takagi factorization V^t S V = diag(lambdas) of a complex symmetric S.
struct TakagiResult {
  ComplexMatrix v;
  std::vector<double> lambdas;  // nonincreasing, >= 0
};

/// Throws NotSymmetric when max|S - S^t| > tol (relative to max|S| when max|S| > 1).
///
/// Built from the Hermitian eigenproblem of conj(S) S. On each eigenspace with
/// eigenvalue sigma^2 > 0 the map x -> conj(S x) / sigma is an antilinear
/// involution; its fixed vectors satisfy S v = sigma conj(v), which is exactly a
/// Takagi column. Repeated values are handled by Gram-Schmidt inside the fixed
/// set (inner products of fixed vectors are real). Columns are sign-normalized
/// so that the first entry of largest magnitude has positive real part (full
/// phase for the kernel, where it is free).
TakagiResult takagi(const ComplexMatrix& s, double tol = kDefaultTol);

/// Group-defining data for check_group_membership.
struct GroupTag {
  enum class Kind { IndefiniteUnitary, PseudoOrthogonal };
  Kind kind = Kind::IndefiniteUnitary;
  std::vector<int> signs;  // diagonal of E

  std::size_t dim() const { return signs.size(); }
  RealMatrix form() const;

  /// U(n,1) acting on row vectors (z_1, ..., z_n, s): E = diag(I_n, -1).
  static GroupTag ball(int n);
  /// U(n+l+1, l+1) acting on (s, w_1..w_l, z_1..z_n): E = diag(-I_{l+1}, I_n).
  static GroupTag generalized_ball(int n, int l);
  /// O(m,2) with E = diag(I_m, -I_2) and det(D) > 0 on the trailing 2x2 block.
  static GroupTag type_iv(int m);
};

struct MembershipResult {
  bool member = false;
  double defect = 0.0;  // max identity defect (and max |imag| for pseudo-orthogonal)
  double det_d = 0.0;   // det of the trailing 2x2 block (pseudo-orthogonal only)
};

/// Indefinite unitary: A E conj(A)^t = E. Pseudo-orthogonal: real entries,
/// T E T^t = E, det(D) > 1e-12 strictly.
MembershipResult check_group_membership(const ComplexMatrix& m, const GroupTag& group,
                                        double tol = kDefaultTol);

/// Group inverse E A^H E (equals A^{-1} for members).
ComplexMatrix group_inverse(const ComplexMatrix& m, const GroupTag& group);

/// Completes mutually orthonormal real vectors of length `dim` to a real
/// orthogonal matrix whose leading columns are `vs`. Canonical basis vectors
/// are tried in index order; dependents are skipped.
RealMatrix extend_orthonormal_real(std::span<const RealVector> vs, int dim);

/// Completes orthonormal complex columns to a unitary matrix the same way.
ComplexMatrix extend_orthonormal_complex(const ComplexMatrix& columns, int dim);

double max_abs(const ComplexMatrix& m);
double unitarity_defect(const ComplexMatrix& u);

}  // namespace lieball
