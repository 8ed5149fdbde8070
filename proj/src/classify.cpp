#include "lieball/classify.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "lieball/error.hpp"
#include "lieball/hforms.hpp"
#include "lieball/sampling.hpp"
#include "lieball/series.hpp"

namespace lieball {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Automorphism ball_linear(const ComplexMatrix& v) {
  const auto n = v.rows();
  ComplexMatrix m = ComplexMatrix::Identity(n + 1, n + 1);
  m.topLeftCorner(n, n) = v;
  return Automorphism::ball(m);
}

Automorphism typeiv_linear(const RealMatrix& o, const RealMatrix& d) { return typeiv_isotropy(o, d); }

// Coefficient matrix of series rows over the union of their monomials.
ComplexMatrix coefficient_rows(const std::vector<ComplexSeries>& rows, const std::vector<Monomial>& basis) {
  ComplexMatrix c = ComplexMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) c(i, j) = rows[i].coefficient(basis[j]);
  return c;
}

}  // namespace

std::string CanonicalForm::final_class() const { return tag == CaseTag::Rational ? "RIVflip" : "Itheta"; }

ComplexMatrix canonical_unitary(int n, double theta) {
  ComplexMatrix u = ComplexMatrix::Identity(n + 1, n + 1);
  u(n - 1, n - 1) = kI * std::sin(theta);
  u(n - 1, n) = std::cos(theta);
  u(n, n - 1) = std::cos(theta);
  u(n, n) = kI * std::sin(theta);
  return u;
}

ExtractResult extract_unitary(const HoloMap& f, const ExtractOptions& opt) {
  if (f.source.kind != DomainKind::UnitBall || !(f.target == DomainSpec::type_iv(f.source.n + 1)))
    throw Error(ErrorCode::NotIsometry, "classification needs UnitBall(n) -> TypeIV(n+1), got " + f.source.to_string() +
                                            " -> " + f.target.to_string());
  const int n = f.source.n;
  const Point origin = Point::Zero(n);
  if (eval(f, origin).norm() > opt.tol) throw Error(ErrorCode::NotNormalized, "f(0) != 0");

  ExtractResult out;
  Sampler sampler(opt.seed);
  std::vector<Point> probes;
  for (int i = 0; i < opt.probes; ++i) probes.push_back(sampler.interior(f.source, 0.6));
  for (const auto& z : probes) out.kernel_residual = std::max(out.kernel_residual, kernel_identity_residual(f, z, 1));
  if (out.kernel_residual > 1e3 * opt.tol)
    throw Error(ErrorCode::NotIsometry, "kernel identity residual " + std::to_string(out.kernel_residual));

  const std::vector<int> weights(n, 1);
  std::vector<ComplexSeries> fs;
  for (const auto& e : f.components) fs.push_back(expand_series<Complex>(e, weights, opt.order));
  ComplexSeries half_sum(weights, opt.order);
  for (const auto& s : fs) half_sum = half_sum + s * s;
  half_sum = Complex(0.5, 0.0) * half_sum;
  std::vector<ComplexSeries> lhs;
  for (int j = 0; j < n; ++j) lhs.push_back(ComplexSeries::variable(weights, opt.order, j));
  lhs.push_back(half_sum);

  std::set<Monomial, decltype(&graded_lex_less)> mons(&graded_lex_less);
  for (const auto* group : {&fs, &lhs})
    for (const auto& s : *group)
      for (const auto& [m, c] : s.terms()) mons.insert(m);
  const std::vector<Monomial> basis(mons.begin(), mons.end());
  try {
    out.u = dangelo_unitary(coefficient_rows(lhs, basis), coefficient_rows(fs, basis), std::max(opt.tol, 1e-10));
  } catch (const Error& e) {
    throw Error(ErrorCode::RecoveryFailed, e.what());
  }

  for (const auto& z : probes) {
    const Point w = eval(f, z);
    ComplexVector left(n + 1);
    left.head(n) = z;
    left(n) = 0.5 * (w.transpose() * w)(0, 0);
    const ComplexVector right = out.u.transpose() * w;
    out.probe_residual = std::max(out.probe_residual, (left - right).cwiseAbs().maxCoeff());
  }
  if (out.probe_residual > 1e3 * opt.tol)
    throw Error(ErrorCode::RecoveryFailed, "probe residual " + std::to_string(out.probe_residual));
  return out;
}

CanonicalForm normalize_unitary(const ComplexMatrix& u_in, double tol) {
  if (u_in.rows() != u_in.cols() || u_in.rows() < 2) throw Error(ErrorCode::DimensionMismatch, "unitary shape");
  if (unitarity_defect(u_in) > tol) throw Error(ErrorCode::NotUnitary, "defect " + std::to_string(unitarity_defect(u_in)));
  const int n = static_cast<int>(u_in.rows()) - 1;
  CanonicalForm cf;
  cf.n = n;
  ComplexMatrix u = u_in;

  // (1) Takagi on U0^t U0, source change z~ = z V.
  {
    const ComplexMatrix u0 = u.leftCols(n);
    const TakagiResult tk = takagi(u0.transpose() * u0, tol);
    u.leftCols(n) = u0 * tk.v;
    cf.steps.push_back({"takagi", "U0 <- U0 V", ball_linear(tk.v.adjoint()), std::nullopt});
    for (int j = 0; j + 1 < n; ++j)
      if (std::abs(tk.lambdas[j] - 1.0) > std::sqrt(tol))
        throw Error(ErrorCode::StructureViolation, "Takagi value " + std::to_string(tk.lambdas[j]) + " != 1");
  }

  // (2) Orthogonality relations of the real and imaginary parts.
  {
    const RealMatrix a = u.leftCols(n).real();
    const RealMatrix b = u.leftCols(n).imag();
    double defect = (a.transpose() * b).cwiseAbs().maxCoeff();
    const RealMatrix aa = a.transpose() * a, bb = b.transpose() * b;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i != j) defect = std::max({defect, std::abs(aa(i, j)), std::abs(bb(i, j))});
      }
    for (int i = 0; i < n; ++i) defect = std::max(defect, std::abs(aa(i, i) + bb(i, i) - 1.0));
    if (defect > std::sqrt(tol)) throw Error(ErrorCode::StructureViolation, "orthogonality defect " + std::to_string(defect));
    ComplexMatrix v = ComplexMatrix::Identity(n, n);
    bool rotated = false;
    for (int j = 0; j + 1 < n; ++j)
      if (b.col(j).norm() > a.col(j).norm()) {
        v(j, j) = kI;
        rotated = true;
      }
    if (rotated) {
      u.leftCols(n) = u.leftCols(n) * v;
      cf.steps.push_back({"i-rotation", "z_j -> i z_j where a_j = 0", ball_linear(v.adjoint()), std::nullopt});
    }
    const RealMatrix bnow = u.leftCols(n - 1).imag();
    if (n > 1 && bnow.cwiseAbs().maxCoeff() > std::sqrt(tol))
      throw Error(ErrorCode::StructureViolation, "more than one non-real column");
  }

  // (3) Extend u_1..u_{n-1} to a real orthonormal basis C; F~ = F C, U <- C^t U.
  {
    std::vector<RealVector> vs;
    for (int j = 0; j + 1 < n; ++j) {
      RealVector a = u.col(j).real();
      vs.push_back(a / a.norm());
    }
    const RealMatrix c = extend_orthonormal_real(vs, n + 1);
    u = c.transpose().cast<Complex>() * u;
    cf.steps.push_back({"basis-extension", "F~ = F C", std::nullopt, typeiv_linear(c, RealMatrix::Identity(2, 2))});
  }

  // (4) Global phase making Re eta orthogonal to Im eta.
  {
    const ComplexVector eta = u.col(n).tail(2);
    const Complex ee = (eta.transpose() * eta)(0, 0);
    double alpha = 0.0;
    if (std::abs(ee) > tol) {
      alpha = 0.5 * std::arg(ee);
      alpha = std::fmod(alpha + 2.0 * kPi, kPi / 2.0);
    }
    if (alpha != 0.0) {
      u.col(n) *= std::polar(1.0, -alpha);
      ComplexMatrix scalar = std::polar(1.0, alpha) * ComplexMatrix::Identity(n, n);
      cf.steps.push_back({"phase", "F^ = e^{-i alpha} F(e^{i alpha} z), alpha = " + std::to_string(alpha),
                          ball_linear(scalar), typeiv_linear(RealMatrix::Identity(n + 1, n + 1), rotation2(alpha))});
    }
  }

  // (5) O(2) rotation Re eta -> (c, 0), then sign flips.
  {
    const ComplexVector eta = u.col(n).tail(2);
    RealVector r = eta.real();
    RealVector s = eta.imag();
    RealMatrix q = RealMatrix::Identity(2, 2);
    if (r.norm() > std::sqrt(tol)) {
      const double rn = r.norm();
      q << r(0) / rn, -r(1) / rn, r(1) / rn, r(0) / rn;
    } else if (s.norm() > std::sqrt(tol)) {
      const double sn = s.norm();
      q << s(1) / sn, s(0) / sn, -s(0) / sn, s(1) / sn;
    }
    RealMatrix o = RealMatrix::Identity(n + 1, n + 1);
    o.bottomRightCorner(2, 2) = q;
    u = o.transpose().cast<Complex>() * u;
    cf.steps.push_back({"o2-rotation", "Re eta -> (c, 0)", std::nullopt, typeiv_linear(o, RealMatrix::Identity(2, 2))});

    RealMatrix flip = RealMatrix::Identity(n + 1, n + 1);
    if (u(n - 1, n).real() < 0.0) flip(n - 1, n - 1) = -1.0;
    if (u(n, n).imag() < 0.0) flip(n, n) = -1.0;
    if (flip != RealMatrix::Identity(n + 1, n + 1)) {
      u = flip.cast<Complex>() * u;
      cf.steps.push_back({"sign-flip", "eta_1 >= 0, eta >= 0", std::nullopt, typeiv_linear(flip, RealMatrix::Identity(2, 2))});
    }
  }

  // theta from eta = (cos t, i sin t), then absorb the phase of xi into z_n.
  const double c = u(n - 1, n).real();
  const double s = u(n, n).imag();
  cf.theta_raw = std::atan2(std::max(s, 0.0), std::max(c, 0.0));
  {
    const Complex xi1 = u(n - 1, n - 1);
    const Complex xi2 = u(n, n - 1);
    const Complex e = xi2 * std::cos(cf.theta_raw) - kI * xi1 * std::sin(cf.theta_raw);
    const double gamma = std::arg(e);
    if (std::abs(gamma) > 0.0) {
      ComplexMatrix v = ComplexMatrix::Identity(n, n);
      v(n - 1, n - 1) = std::polar(1.0, -gamma);
      u.leftCols(n) = u.leftCols(n) * v;
      cf.steps.push_back({"zn-phase", "z_n -> e^{-i gamma} z_n", ball_linear(v.adjoint()), std::nullopt});
    }
  }

  cf.u_final = u;
  cf.final_residual = max_abs(u - canonical_unitary(n, cf.theta_raw));
  cf.margin = std::abs(cf.theta_raw - kPi / 4.0);
  if (cf.margin <= 1e-7) {
    cf.tag = CaseTag::Rational;
    cf.beta = 0.0;
  } else {
    cf.tag = CaseTag::Irrational;
    cf.beta = cf.theta_raw < kPi / 4.0 ? cf.theta_raw : kPi / 2.0 - cf.theta_raw;
  }
  return cf;
}

HoloMap reconstruct_map(int n, double theta) {
  if (n < 1 || !(theta >= 0.0 && theta <= kPi / 2.0))
    throw Error(ErrorCode::ParameterOutOfRange, "reconstruct_map needs n >= 1, theta in [0, pi/2]");
  if (std::abs(std::cos(2.0 * theta)) > 1e-12) {
    HoloMap f = itheta_map(n, theta);
    f.name = "reconstruct:n=" + std::to_string(n) + ",theta=" + std::to_string(theta);
    return f;
  }
  // Linear case: s = S / (2 (1 + i z_n)), f_n = (s - i z_n)/sqrt 2, f_{n+1} = (z_n - i s)/sqrt 2.
  using E = HoloExpr;
  HoloMap f{"reconstruct:n=" + std::to_string(n) + ",theta=pi/4", DomainSpec::unit_ball(n), DomainSpec::type_iv(n + 1), {}};
  std::vector<E> squares;
  for (int j = 0; j < n - 1; ++j) {
    f.components.push_back(E::var(j));
    squares.push_back(E::pow(E::var(j), 2));
  }
  const E zn = E::var(n - 1);
  const ExactScalar i = ExactScalar::imag_unit();
  const E s = E::add(squares) / (E::constant(ExactScalar(2)) * (E::constant(ExactScalar(1)) + E::constant(i) * zn));
  const E inv_sqrt2 = E::constant(ExactScalar::sqrt2() * ExactScalar::rational(1, 2));
  f.components.push_back(inv_sqrt2 * (s - E::constant(i) * zn));
  f.components.push_back(inv_sqrt2 * (zn - E::constant(i) * s));
  return f;
}

WitnessPair equivalence_witness(int n, double theta) {
  if (n < 1 || !(theta >= 0.0 && theta < kPi / 4.0))
    throw Error(ErrorCode::ParameterOutOfRange, "witness needs theta in [0, pi/4)");
  const double k = std::sqrt(std::cos(2.0 * theta));
  const double ct = std::cos(theta), st = std::sin(theta);
  WitnessPair w;
  w.b = ComplexMatrix::Identity(n + 1, n + 1);
  w.b(n - 1, n - 1) = ct / k;
  w.b(n - 1, n) = -kI * st / k;
  w.b(n, n - 1) = kI * st / k;
  w.b(n, n) = ct / k;
  const double h2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
  const double a = 1.0 - 4.0 * h2;
  const double b = 2.0 * std::sqrt(2.0) * h2;
  const double c = -std::sqrt(2.0) * st;
  RealMatrix v(4, 4);
  v << a, 0, b, 0,
       0, 1, 0, c,
       b, 0, a, 0,
       0, c, 0, 1;
  w.t = RealMatrix::Identity(n + 3, n + 3);
  w.t.bottomRightCorner(4, 4) = v / k;
  return w;
}

double witness_intertwining_residual(const WitnessPair& w, int n, double theta, int samples, std::uint64_t seed) {
  const HoloMap i0 = itheta_map(n, 0.0);
  const HoloMap it = itheta_map(n, theta);
  Sampler sampler(seed);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Point z = sampler.interior(DomainSpec::unit_ball(n), 0.9);
    ComplexVector zs(n + 1);
    zs.head(n) = z;
    zs(n) = 1.0;
    const ComplexVector left = w.t.cast<Complex>().transpose() * lift(eval(i0, z)).lift;
    const ComplexVector moved = w.b.transpose() * zs;
    const Point wz = moved.head(n) / moved(n);
    const ComplexVector right = lift(eval(it, wz)).lift;
    const Complex scale = right.dot(left) / right.squaredNorm();
    worst = std::max(worst, (left - scale * right).norm() / left.norm());
  }
  return worst;
}

Classification classify_map(const HoloMap& f_in, const ExtractOptions& opt) {
  Classification out;
  HoloMap f = f_in;
  std::optional<NormalizationStep> origin_step;
  if (f.source.kind == DomainKind::UnitBall && f.target.kind == DomainKind::TypeIV) {
    const Point w0 = eval(f, Point::Zero(f.arity()));
    if (w0.norm() > opt.tol) {
      const Automorphism psi = typeiv_aut_to_origin(w0);
      f = compose_autos(std::nullopt, f, psi);
      origin_step = NormalizationStep{"origin", "target automorphism sending f(0) to 0", std::nullopt, psi};
    }
  }
  out.extraction = extract_unitary(f, opt);
  out.form = normalize_unitary(out.extraction.u, std::max(opt.tol, 1e-8));
  if (origin_step) out.form.steps.insert(out.form.steps.begin(), *origin_step);
  if (out.form.tag == CaseTag::Irrational) out.witness = equivalence_witness(out.form.n, out.form.beta);
  return out;
}

HoloMap replay(const HoloMap& f, const std::vector<NormalizationStep>& steps) {
  HoloMap g = f;
  for (const auto& s : steps) g = compose_autos(s.pre, g, s.post);
  return g;
}

}  // namespace lieball
