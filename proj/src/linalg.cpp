#include "lieball/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lieball/error.hpp"

namespace lieball {

namespace {

// Index of the first entry with (nearly) maximal magnitude.
Eigen::Index leading_index(const ComplexVector& v) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) best = std::max(best, std::abs(v(i)));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) >= best * (1.0 - 1e-9)) return i;
  return 0;
}

void normalize_sign(ComplexVector& v) {
  const Complex lead = v(leading_index(v));
  const bool flip = std::abs(lead.real()) > 1e-12 * std::abs(lead) ? lead.real() < 0.0 : lead.imag() < 0.0;
  if (flip) v = -v;
}

void normalize_phase(ComplexVector& v) {
  const Complex lead = v(leading_index(v));
  if (std::abs(lead) > 0.0) v *= std::conj(lead) / std::abs(lead);
}

// Orthonormal basis of the real span of `candidates` under a complex inner
// product that is real on that span (largest remaining candidate first).
std::vector<ComplexVector> real_gram_schmidt(const std::vector<ComplexVector>& candidates, std::size_t want) {
  std::vector<ComplexVector> rest = candidates;
  std::vector<ComplexVector> basis;
  while (basis.size() < want && !rest.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rest.size(); ++i)
      if (rest[i].norm() > rest[best].norm()) best = i;
    const double nrm = rest[best].norm();
    if (nrm <= 1e-6) break;
    ComplexVector b = rest[best] / nrm;
    for (const auto& prev : basis) b -= prev * prev.dot(b).real();
    b /= b.norm();
    basis.push_back(b);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    for (auto& x : rest) x -= b * b.dot(x).real();
  }
  return basis;
}

}  // namespace

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double unitarity_defect(const ComplexMatrix& u) {
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols()));
}

TakagiResult takagi(const ComplexMatrix& s, double tol) {
  if (s.rows() != s.cols()) throw Error(ErrorCode::DimensionMismatch, "takagi needs a square matrix");
  const Eigen::Index n = s.rows();
  const double scale = std::max(1.0, max_abs(s));
  if (max_abs(s - s.transpose()) > tol * scale) throw Error(ErrorCode::NotSymmetric, "takagi input");
  if (n == 0) return {};

  const ComplexMatrix sym = 0.5 * (s + s.transpose());
  Eigen::JacobiSVD<ComplexMatrix> svd(sym, Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "singular value decomposition");

  // Singular values come descending; right singular vectors diagonalize S^H S.
  std::vector<double> sigma(n);
  std::vector<ComplexVector> vecs(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sigma[k] = svd.singularValues()(k);
    vecs[k] = svd.matrixV().col(k);
  }

  const double smax = sigma.front();
  const double cluster_tol = 1e-9 * std::max(1.0, smax);
  const double zero_tol = 1e-12 * std::max(1.0, smax) * static_cast<double>(n);

  TakagiResult out;
  out.v = ComplexMatrix::Zero(n, n);
  out.lambdas.assign(n, 0.0);
  Eigen::Index col = 0;
  std::size_t k = 0;
  while (k < static_cast<std::size_t>(n)) {
    std::size_t end = k + 1;
    while (end < static_cast<std::size_t>(n) && sigma[k] - sigma[end] <= cluster_tol) ++end;
    const std::size_t dim = end - k;
    double sig = 0.0;
    for (std::size_t j = k; j < end; ++j) sig += sigma[j];
    sig /= static_cast<double>(dim);

    std::vector<ComplexVector> basis;
    if (sig > zero_tol) {
      std::vector<ComplexVector> candidates;
      for (std::size_t j = k; j < end; ++j) {
        const ComplexVector& x = vecs[j];
        const ComplexVector jx = (sym * x).conjugate() / sig;
        candidates.push_back(x + jx);
        candidates.push_back(Complex(0, 1) * (x - jx));
      }
      basis = real_gram_schmidt(candidates, dim);
      if (basis.size() != dim) throw Error(ErrorCode::NoConvergence, "takagi fixed-point basis");
      for (auto& b : basis) normalize_sign(b);
    } else {
      for (std::size_t j = k; j < end; ++j) basis.push_back(vecs[j]);
      for (auto& b : basis) normalize_phase(b);
    }
    for (auto& b : basis) {
      out.v.col(col) = b;
      // Refined value straight from S keeps the reconstruction tight.
      out.lambdas[col] = sig > zero_tol ? std::max(0.0, (b.transpose() * sym * b)(0, 0).real()) : 0.0;
      ++col;
    }
    k = end;
  }

  // Refinement can perturb order within a cluster; keep the contract.
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return out.lambdas[a] > out.lambdas[b] + cluster_tol; });
  TakagiResult sorted;
  sorted.v.resize(n, n);
  sorted.lambdas.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    sorted.v.col(j) = out.v.col(order[j]);
    sorted.lambdas[j] = out.lambdas[order[j]];
  }
  for (Eigen::Index j = 1; j < n; ++j)
    sorted.lambdas[j] = std::min(sorted.lambdas[j], sorted.lambdas[j - 1]);
  return sorted;
}

RealMatrix GroupTag::form() const {
  RealMatrix e = RealMatrix::Zero(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
  for (std::size_t i = 0; i < dim(); ++i) e(i, i) = signs[i];
  return e;
}

GroupTag GroupTag::ball(int n) {
  GroupTag g;
  g.signs.assign(n, 1);
  g.signs.push_back(-1);
  return g;
}

GroupTag GroupTag::generalized_ball(int n, int l) {
  GroupTag g;
  g.signs.assign(l + 1, -1);
  g.signs.insert(g.signs.end(), n, 1);
  return g;
}

GroupTag GroupTag::type_iv(int m) {
  GroupTag g;
  g.kind = Kind::PseudoOrthogonal;
  g.signs.assign(m, 1);
  g.signs.push_back(-1);
  g.signs.push_back(-1);
  return g;
}

MembershipResult check_group_membership(const ComplexMatrix& m, const GroupTag& group, double tol) {
  const auto d = static_cast<Eigen::Index>(group.dim());
  if (m.rows() != d || m.cols() != d) throw Error(ErrorCode::DimensionMismatch, "group element size");
  const ComplexMatrix e = group.form().cast<Complex>();
  MembershipResult r;
  if (group.kind == GroupTag::Kind::IndefiniteUnitary) {
    r.defect = max_abs(m * e * m.adjoint() - e);
    r.member = r.defect <= tol;
    return r;
  }
  const double imag = m.imag().cwiseAbs().maxCoeff();
  const RealMatrix t = m.real();
  const RealMatrix er = group.form();
  r.defect = std::max(imag, (t * er * t.transpose() - er).cwiseAbs().maxCoeff());
  r.det_d = t.bottomRightCorner(2, 2).determinant();
  r.member = r.defect <= tol && r.det_d > 1e-12;
  return r;
}

ComplexMatrix group_inverse(const ComplexMatrix& m, const GroupTag& group) {
  const ComplexMatrix e = group.form().cast<Complex>();
  if (group.kind == GroupTag::Kind::IndefiniteUnitary) return e * m.adjoint() * e;
  return e * m.transpose() * e;
}

RealMatrix extend_orthonormal_real(std::span<const RealVector> vs, int dim) {
  for (const auto& v : vs)
    if (v.size() != dim) throw Error(ErrorCode::DimensionMismatch, "extend_orthonormal_real vector length");
  if (static_cast<int>(vs.size()) > dim) throw Error(ErrorCode::NotOrthonormal, "too many vectors");
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) {
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(vs[i].dot(vs[j]) - want) > kDefaultTol)
        throw Error(ErrorCode::NotOrthonormal, "input vectors are not orthonormal");
    }
  RealMatrix c(dim, dim);
  int col = 0;
  for (const auto& v : vs) c.col(col++) = v;
  for (int k = 0; k < dim && col < dim; ++k) {
    RealVector x = RealVector::Unit(dim, k);
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < col; ++j) x -= c.col(j) * c.col(j).dot(x);
    const double nrm = x.norm();
    if (nrm > 1e-6) c.col(col++) = x / nrm;
  }
  return c;
}

ComplexMatrix extend_orthonormal_complex(const ComplexMatrix& columns, int dim) {
  ComplexMatrix c(dim, dim);
  Eigen::Index col = 0;
  for (; col < columns.cols(); ++col) c.col(col) = columns.col(col);
  for (int k = 0; k < dim && col < dim; ++k) {
    ComplexVector x = ComplexVector::Unit(dim, k);
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < col; ++j) x -= c.col(j) * c.col(j).dot(x);
    const double nrm = x.norm();
    if (nrm > 1e-6) c.col(col++) = x / nrm;
  }
  return c;
}

}  // namespace lieball
