#include "lieball/hforms.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lieball/error.hpp"

namespace lieball {

namespace {

int degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

Complex monomial_value(const Monomial& m, const Point& z) {
  Complex v = 1.0;
  for (std::size_t j = 0; j < m.size(); ++j)
    for (int e = 0; e < m[j]; ++e) v *= z(static_cast<Eigen::Index>(j));
  return v;
}

Monomial add_monomials(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  const int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

BiPoly BiPoly::constant(int nvars, const ExactScalar& c) {
  BiPoly p(nvars);
  p.add_term({Monomial(nvars, 0), Monomial(nvars, 0)}, c);
  return p;
}

BiPoly BiPoly::outer(const ExactSeries& p, const ExactSeries& q) {
  BiPoly out(static_cast<int>(p.nvars()));
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) out.add_term({a, b}, ca * cb.conj());
  return out;
}

BiPoly BiPoly::norm_squared(int nvars) {
  BiPoly out(nvars);
  for (int j = 0; j < nvars; ++j) {
    Monomial m(nvars, 0);
    m[j] = 1;
    out.add_term({m, m}, ExactScalar(1));
  }
  return out;
}

void BiPoly::add_term(const Key& k, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
  return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out(a.n_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term({add_monomials(ka.first, kb.first), add_monomials(ka.second, kb.second)}, ca * cb);
  return out;
}

BiPoly operator*(const ExactScalar& s, const BiPoly& a) {
  BiPoly out(a.n_);
  for (const auto& [k, c] : a.terms_) out.add_term(k, s * c);
  return out;
}

BiPoly BiPoly::pow(int p) const {
  BiPoly r = constant(n_, ExactScalar(1));
  for (int i = 0; i < p; ++i) r = r * *this;
  return r;
}

Complex BiPoly::value(const Point& z) const {
  Complex v = 0.0;
  for (const auto& [k, c] : terms_)
    v += c.to_complex() * monomial_value(k.first, z) * std::conj(monomial_value(k.second, z));
  return v;
}

HermitianForm::HermitianForm(const BiPoly& p) : n_(p.nvars()), poly_(p) {
  std::set<Monomial, decltype(&graded_lex_less)> rows(&graded_lex_less);
  for (const auto& [k, c] : p.terms()) {
    rows.insert(k.first);
    rows.insert(k.second);
    auto it = p.terms().find({k.second, k.first});
    if (it == p.terms().end() || it->second != c.conj())
      throw Error(ErrorCode::NotSymmetric, "bihomogeneous coefficients are not Hermitian");
  }
  basis_.assign(rows.begin(), rows.end());
  coeff_.assign(basis_.size(), std::vector<ExactScalar>(basis_.size()));
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis_.size(); ++i) index[basis_[i]] = i;
  for (const auto& [k, c] : p.terms()) coeff_[index[k.first]][index[k.second]] = c;
}

ComplexMatrix HermitianForm::matrix() const {
  const auto size = static_cast<Eigen::Index>(basis_.size());
  ComplexMatrix m(size, size);
  for (Eigen::Index a = 0; a < size; ++a)
    for (Eigen::Index b = 0; b < size; ++b) m(a, b) = coeff_[a][b].to_complex();
  return m;
}

double HermitianForm::value(const Point& z) const { return poly_.value(z).real(); }

BiPoly bipoly_from_components(const std::vector<HoloExpr>& comps, int nvars, FormMode mode) {
  BiPoly out(nvars);
  std::vector<ExactSeries> polys;
  for (const auto& e : comps) polys.push_back(expand_polynomial(e, nvars));
  for (const auto& p : polys) out = out + BiPoly::outer(p, p);
  if (mode == FormMode::TypeIVKernel) {
    ExactSeries q(std::vector<int>(nvars, 1), -1);
    for (const auto& p : polys) q = q + p * p;
    out = out - ExactScalar::rational(1, 4) * BiPoly::outer(q, q);
  }
  return out;
}

HermitianForm form_from_map(const HoloMap& f, FormMode mode) {
  return HermitianForm(bipoly_from_components(f.components, f.arity(), mode));
}

SignatureResult signature(const HermitianForm& h, double tol) {
  SignatureResult r;
  if (h.basis().empty()) return r;
  const ComplexMatrix m = h.matrix();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(m, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw Error(ErrorCode::NoConvergence, "signature eigensolver");
  const auto& ev = eig.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= tol * scale)
      ++r.zeros;
    else if (ev(i) > 0)
      ++r.positives;
    else
      ++r.negatives;
  }
  return r;
}

SignatureResult power_signature(int n, int p) {
  if (n < 1 || p < 1) throw Error(ErrorCode::ParameterOutOfRange, "power_signature needs n, p >= 1");
  const BiPoly base = BiPoly::constant(n, ExactScalar(1)) - BiPoly::norm_squared(n);
  return signature(HermitianForm(base.pow(p)));
}

ComplexMatrix dangelo_unitary(const ComplexMatrix& f, const ComplexMatrix& g, double tol) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw Error(ErrorCode::DimensionMismatch, "dangelo_unitary needs equal shapes");
  const auto k = f.rows();
  const double scale = std::max({1.0, max_abs(f), max_abs(g)});
  const double gram = max_abs(f.adjoint() * f - g.adjoint() * g);
  if (gram > tol * scale * scale) throw Error(ErrorCode::NormMismatch, "norm forms differ by " + std::to_string(gram));

  // F = W G with W unitary; U = W^t.
  Eigen::JacobiSVD<ComplexMatrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const ComplexMatrix& p = svd.matrixU();
  const ComplexMatrix fq = f * svd.matrixV();
  const auto& sigma = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > 1e-9 * std::max(1.0, sigma(0))) ++rank;
  ComplexMatrix images(k, rank);
  for (Eigen::Index i = 0; i < rank; ++i) images.col(i) = fq.col(i) / sigma(i);
  // Orthonormalize against rounding before completing.
  for (Eigen::Index i = 0; i < rank; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) images.col(i) -= images.col(j) * images.col(j).dot(images.col(i));
    images.col(i).normalize();
  }
  const ComplexMatrix r = extend_orthonormal_complex(images, static_cast<int>(k));
  const ComplexMatrix w = r * p.adjoint();
  const ComplexMatrix u = w.transpose();
  const double residual = max_abs(f - u.transpose() * g);
  if (residual > 100.0 * tol * scale || unitarity_defect(u) > 1e-9)
    throw Error(ErrorCode::NoSolution, "recovered unitary residual " + std::to_string(residual));
  return u;
}

ComplexMatrix dangelo_unitary(const std::vector<HoloExpr>& f, const std::vector<HoloExpr>& g, int nvars, double tol) {
  if (f.size() != g.size()) throw Error(ErrorCode::DimensionMismatch, "dangelo_unitary needs equal lengths");
  std::vector<ExactSeries> fp, gp;
  std::set<Monomial, decltype(&graded_lex_less)> basis(&graded_lex_less);
  for (const auto& e : f) {
    fp.push_back(expand_polynomial(e, nvars));
    for (const auto& [m, c] : fp.back().terms()) basis.insert(m);
  }
  for (const auto& e : g) {
    gp.push_back(expand_polynomial(e, nvars));
    for (const auto& [m, c] : gp.back().terms()) basis.insert(m);
  }
  const std::vector<Monomial> mons(basis.begin(), basis.end());
  const auto k = static_cast<Eigen::Index>(f.size());
  const auto cols = static_cast<Eigen::Index>(std::max<std::size_t>(mons.size(), 1));
  ComplexMatrix fc = ComplexMatrix::Zero(k, cols), gc = ComplexMatrix::Zero(k, cols);
  for (Eigen::Index i = 0; i < k; ++i)
    for (std::size_t j = 0; j < mons.size(); ++j) {
      fc(i, j) = fp[i].coefficient(mons[j]).to_complex();
      gc(i, j) = gp[i].coefficient(mons[j]).to_complex();
    }
  return dangelo_unitary(fc, gc, tol);
}

}  // namespace lieball
