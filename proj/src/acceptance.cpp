#include "lieball/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include "lieball/classify.hpp"
#include "lieball/error.hpp"
#include "lieball/hforms.hpp"
#include "lieball/jets.hpp"
#include "lieball/metrics.hpp"
#include "lieball/sampling.hpp"

namespace lieball {

namespace {

namespace tol = acceptance_tol;
constexpr double kPi = std::numbers::pi;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

CriterionResult timed(int id, const char* name, const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("unexpected error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

HoloMap automorphism_map(const Automorphism& a) {
  const DomainSpec d = a.domain();
  std::vector<HoloExpr> vars;
  for (int j = 0; j < d.dimension(); ++j) vars.push_back(HoloExpr::var(j));
  return HoloMap{"aut", d, d, apply_exprs(a, vars)};
}

}  // namespace

CriterionResult check_isometry_constants(const AcceptanceConfig& cfg) {
  return timed(1, "isometry-constants", [&](CriterionResult& r) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> keys;
    for (int n : {2, 3, 4}) keys.push_back("RIV:n=" + std::to_string(n));
    for (int n : {2, 3, 4})
      for (const char* t : {"0", "pi/12", "pi/6"}) keys.push_back("Itheta:n=" + std::to_string(n) + ",theta=" + t);
    keys.push_back("flat:n=2,m=4");
    keys.push_back("flat:n=3,m=5");
    IsometryOptions opt;
    opt.seed = cfg.seed;
    opt.tol = tol::kIsometry;
    double worst = 0.0;
    std::string failed;
    for (const auto& key : keys) {
      const HoloMap f = catalog_build(key);
      const auto v = isometry_check(f, expected_lambda(f.source.n, f.target.m).front(), opt);
      worst = std::max(worst, v.max_residual);
      if (!v.pass) failed += " " + key;
    }
    // L: pullback at 0 is I_m while the source metric at 0 is m I_m, so lambda = 1/m.
    double l_zero = 0.0;
    for (int m : {3, 4, 5}) {
      const HoloMap l = catalog_build("L:m=" + std::to_string(m));
      const Point o = Point::Zero(m);
      l_zero = std::max(l_zero, max_abs(pullback_metric(l, o).g - ComplexMatrix::Identity(m, m)));
      l_zero = std::max(l_zero, max_abs(metric_matrix(l.source, o).g / double(m) - ComplexMatrix::Identity(m, m)));
      const auto v = isometry_check(l, 1.0 / m, opt);
      worst = std::max(worst, v.max_residual);
      if (!v.pass) failed += " L:m=" + std::to_string(m);
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = failed.empty() && l_zero <= 1e-14 && elapsed <= tol::kIsometryRuntime;
    r.detail = std::to_string(keys.size() + 3) + " maps, 200 samples each, max residual " + sci(worst) + " (tol " +
               sci(tol::kIsometry) + "), L pullback at 0 vs I_m " + sci(l_zero) + ", runtime limit " +
               std::to_string(static_cast<int>(tol::kIsometryRuntime)) + " s";
    if (!failed.empty()) r.detail += ", failed:" + failed;
  });
}

CriterionResult check_nonisometry_separation(const AcceptanceConfig& cfg) {
  return timed(2, "non-isometry-separation", [&](CriterionResult& r) {
    const HoloMap w = catalog_build("whitneyIV:n=3");
    ProperOptions popt;
    popt.seed = cfg.seed;
    popt.tol = tol::kProperBoundary;
    const auto pv = proper_check(w, popt);
    IsometryOptions iopt;
    iopt.seed = cfg.seed;
    const auto wv = isometry_check(w, 2.0 * 3 / 4.0, iopt);
    const HoloMap g = catalog_build("Gk:k=2");
    const auto g1 = isometry_check(g, 1.0, iopt);
    const auto g2 = isometry_check(g, 2.0, iopt);
    r.pass = pv.pass && !wv.pass && wv.max_residual >= tol::kNonIsometryFloor && !g1.pass && !g2.pass;
    r.detail = "WhitneyIV(3) boundary residual " + sci(pv.boundary_residual) + " on " + std::to_string(pv.samples) +
               " sphere points, isometry residual " + sci(wv.max_residual) + " at lambda 3/2; G2 residual " +
               sci(g1.max_residual) + " (lambda 1), " + sci(g2.max_residual) + " (lambda 2)";
  });
}

CriterionResult check_classification_round_trip(const AcceptanceConfig& cfg) {
  return timed(3, "classification-round-trip", [&](CriterionResult& r) {
    Sampler sampler(cfg.seed);
    double worst_beta = 0.0;
    int mismatches = 0, runs = 0;
    for (int n : {2, 3, 4})
      for (double theta : {0.0, kPi / 12, kPi / 6, kPi / 4, kPi / 3}) {
        const bool rational = theta == kPi / 4;
        const double beta = rational ? 0.0 : std::min(theta, kPi / 2 - theta);
        const HoloMap f = reconstruct_map(n, theta);
        auto check = [&](const HoloMap& g) {
          const auto c = classify_map(g);
          ++runs;
          if ((c.form.tag == CaseTag::Rational) != rational) ++mismatches;
          worst_beta = std::max(worst_beta, std::abs(c.form.beta - beta));
        };
        check(f);
        for (int k = 0; k < 20; ++k) {
          ComplexMatrix rot = ComplexMatrix::Identity(n + 1, n + 1);
          rot.topLeftCorner(n, n) = sampler.unitary(n);
          const Automorphism pre = Automorphism::ball(rot);
          const Automorphism post = typeiv_isotropy(sampler.orthogonal(n + 1), rotation2(sampler.uniform(0.0, 2 * kPi)));
          check(compose_autos(pre, f, post));
        }
      }
    r.pass = mismatches == 0 && worst_beta <= tol::kBeta;
    r.detail = std::to_string(runs) + " classifications (15 seeds + 20 conjugations each), tag mismatches " +
               std::to_string(mismatches) + ", max beta error " + sci(worst_beta) + " (tol " + sci(tol::kBeta) + ")";
  });
}

CriterionResult check_witnesses(const AcceptanceConfig& cfg) {
  return timed(4, "witness-certification", [&](CriterionResult& r) {
    double membership = 0.0, intertwining = 0.0;
    for (int n : {2, 3, 4})
      for (double theta : {kPi / 12, kPi / 6, kPi / 5}) {
        const WitnessPair w = equivalence_witness(n, theta);
        const auto mb = check_group_membership(w.b, GroupTag::ball(n));
        const auto mt = check_group_membership(w.t.cast<Complex>(), GroupTag::type_iv(n + 1));
        membership = std::max({membership, mb.defect, mt.defect});
        if (!mt.member || mt.det_d <= 0.0 || !mb.member) membership = std::max(membership, 1.0);
        intertwining = std::max(intertwining, witness_intertwining_residual(w, n, theta, 100, cfg.seed));
      }
    r.pass = membership <= tol::kMembership && intertwining <= tol::kIntertwining;
    r.detail = "theta in {pi/12, pi/6, pi/5}, n in {2,3,4}: membership defect " + sci(membership) + " (tol " +
               sci(tol::kMembership) + "), intertwining " + sci(intertwining) + " (tol " + sci(tol::kIntertwining) +
               ") at 100 samples";
  });
}

CriterionResult check_signatures(const AcceptanceConfig&) {
  return timed(5, "signature-suite", [&](CriterionResult& r) {
    int disagreements = 0, low = 0;
    for (int n = 2; n <= 4; ++n)
      for (int p = 2; p <= 4; ++p) {
        const auto closed = power_signature(n, p);
        const BiPoly base = BiPoly::constant(n, ExactScalar(1)) - BiPoly::norm_squared(n);
        const auto brute = signature(HermitianForm(base.pow(p)));
        if (!(closed == brute)) ++disagreements;
        if (closed.positives < 3) ++low;
      }
    const auto s22 = power_signature(2, 2);
    const auto ex = signature(form_from_map(catalog_build("exhp0:n=2"), FormMode::TypeIVKernel));
    r.pass = disagreements == 0 && low == 0 && s22 == SignatureResult{4, 2, 0} && ex.negatives >= 1;
    r.detail = "9 (n,p) pairs, closed form vs eigen count disagreements " + std::to_string(disagreements) +
               ", positives < 3: " + std::to_string(low) + "; (2,2) -> (" + std::to_string(s22.positives) + "," +
               std::to_string(s22.negatives) + "," + std::to_string(s22.zeros) + "); exhp0(2) negatives " +
               std::to_string(ex.negatives);
  });
}

CriterionResult check_group_invariance(const AcceptanceConfig& cfg) {
  return timed(6, "group-metric-invariance", [&](CriterionResult& r) {
    Sampler sampler(cfg.seed);
    double metric = 0.0;
    int class_changes = 0, evaluated = 0, skipped = 0;
    for (const DomainSpec& d : {DomainSpec::unit_ball(3), DomainSpec::generalized_ball(2, 1), DomainSpec::type_iv(4)}) {
      for (int k = 0; k < 20; ++k) {
        const Automorphism a = random_automorphism(d, sampler);
        const HoloMap am = automorphism_map(a);
        for (int s = 0; s < 200; ++s) {
          const bool on_boundary = s % 4 == 3;
          const Point z = on_boundary ? sampler.boundary(d) : sampler.interior(d, 0.9);
          try {
            const Point w = apply_automorphism(a, z);
            if (classify_point(d, z, 1e-8).tag != classify_point(d, w, 1e-8).tag) ++class_changes;
            if (!on_boundary) {
              const ComplexMatrix pb = pullback_metric(am, z).g;
              metric = std::max(metric, metric_residual(pb, metric_matrix(d, z).g));
            }
            ++evaluated;
          } catch (const Error&) {
            ++skipped;
          }
        }
      }
    }
    double lift_err = 0.0;
    for (int k = 0; k < 20; ++k) {
      const RealMatrix o = sampler.orthogonal(4);
      const double phi = sampler.uniform(0.0, 2 * kPi);
      const Automorphism a = typeiv_isotropy(o, rotation2(phi));
      const Point z = sampler.interior(DomainSpec::type_iv(4), 0.9);
      const Point expect = std::polar(1.0, -phi) * (o.cast<Complex>().transpose() * z);
      lift_err = std::max(lift_err, (apply_automorphism(a, z) - expect).cwiseAbs().maxCoeff());
    }
    r.pass = class_changes == 0 && metric <= tol::kMetricInvariance && lift_err <= tol::kLiftAction &&
             skipped * 10 < evaluated;
    r.detail = "3 domains x 20 automorphisms x 200 samples: class changes " + std::to_string(class_changes) +
               ", metric residual " + sci(metric) + " (tol " + sci(tol::kMetricInvariance) + "), skipped " +
               std::to_string(skipped) + "; isotropy lift vs Z A e^{-i phi} " + sci(lift_err);
  });
}

CriterionResult check_jets(const AcceptanceConfig&) {
  return timed(7, "jet-suite", [&](CriterionResult& r) {
    using E = HoloExpr;
    const int n = 3;
    std::vector<HoloMap> flat{heisenberg_embedding(n, n + 1)};
    for (const E& psi : {E::pow(E::var(0), 2), E::var(0) * E::var(1), E::var(n - 1)}) {
      flat.push_back(heisenberg_psi_map(n, n + 2, psi));
      flat.push_back(heisenberg_psi_map(n, n + 3, psi));
    }
    int nonzero = 0, constraint_failures = 0;
    for (const auto& f : flat) {
      if (!mapping_residual(f, 8).vanishes()) ++nonzero;
      if (!normal_form_check(f, 8).constraint_holds) ++constraint_failures;
    }
    const HoloMap cayley = cayley_transported_embedding(n, n + 2, ExactScalar::rational(5, 4), ExactScalar::rational(3, 4));
    const bool cayley_ok = mapping_residual(cayley, 8).vanishes();

    HoloMap broken = heisenberg_embedding(n, n + 1);
    broken.components[n - 1] = E::pow(E::var(0), 2);
    const auto br = mapping_residual(broken, 8);
    ExactSeries expect(restricted_weights(n), 8);
    Monomial m(restricted_weights(n).size(), 0);
    m[0] = 2;
    m[n - 1] = 2;
    expect.add_term(m, ExactScalar(-1));
    const bool broken_ok = br.first_nonzero() == 4 && (br.parts[4] - expect).is_zero();

    r.pass = nonzero == 0 && constraint_failures == 0 && cayley_ok && broken_ok;
    r.detail = std::to_string(flat.size()) + " flat maps through weighted order 8: nonzero residuals " +
               std::to_string(nonzero) + ", normal-form constraint failures " + std::to_string(constraint_failures) +
               "; Cayley transport " + (cayley_ok ? "exact" : "NONZERO") + "; broken map order-4 part " +
               to_string(br.parts.at(4), restricted_names(n));
  });
}

CriterionResult check_oracles(const AcceptanceConfig& cfg) {
  return timed(8, "oracle-cross-checks", [&](CriterionResult& r) {
    Sampler sampler(cfg.seed);
    const std::vector<std::string> keys{"RIV:n=3",      "Itheta:n=3,theta=pi/7", "Izero:n=2",    "L:m=3",
                                        "flat:n=2,m=4", "whitneyIV:n=2",         "Gk:k=3",       "psi:m=4,n=2",
                                        "exhp0:n=2",    "classB:n=2"};
    double jac = 0.0;
    const double h = 1e-6;
    for (const auto& key : keys) {
      const HoloMap f = catalog_build(key);
      for (int k = 0; k < 20; ++k) {
        const Point z = sampler.interior(f.source, 0.6);
        const ComplexMatrix j = jacobian(f, z);
        ComplexMatrix fd(j.rows(), j.cols());
        for (int a = 0; a < f.arity(); ++a) {
          Point zp = z, zm = z;
          zp(a) += h;
          zm(a) -= h;
          fd.row(a) = ((eval(f, zp) - eval(f, zm)) / (2 * h)).transpose();
        }
        jac = std::max(jac, max_abs(j - fd) / std::max(1.0, max_abs(j)));
      }
    }

    double met = 0.0;
    for (const DomainSpec& d : {DomainSpec::unit_ball(3), DomainSpec::generalized_ball(2, 1), DomainSpec::type_iv(4)}) {
      const double kappa = metric_exponent(d);
      const int dim = d.dimension();
      auto logrho = [&](const Point& p) { return std::log(defining_values(d, p).front()); };
      for (int k = 0; k < 20; ++k) {
        const Point z = sampler.interior(d, 0.5);
        // -kappa d_a dbar_b log rho with d_a dbar_b = (1/4)(dx_a - i dy_a)(dx_b + i dy_b),
        // central differences at steps e and e/2 combined by Richardson extrapolation.
        auto ddbar = [&](int a, int b, double e) {
          auto second = [&](Complex da, Complex db) {
            auto at = [&](double s, double t) {
              Point p = z;
              p(a) += s * e * da;
              p(b) += t * e * db;
              return logrho(p);
            };
            return (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4 * e * e);
          };
          const Complex i(0, 1);
          return 0.25 * (second(1.0, 1.0) + second(i, i) + i * (second(1.0, i) - second(i, 1.0)));
        };
        ComplexMatrix g(dim, dim);
        for (int a = 0; a < dim; ++a)
          for (int b = 0; b < dim; ++b) {
            const double e = 1e-3;
            g(a, b) = -kappa * (4.0 * ddbar(a, b, e / 2) - ddbar(a, b, e)) / 3.0;
          }
        const ComplexMatrix exact = metric_matrix(d, z).g;
        met = std::max(met, max_abs(exact - g) / std::max(1.0, max_abs(exact)));
      }
    }

    double tk = 0.0;
    for (int k = 0; k < 100; ++k) {
      const int size = 1 + k % 8;
      ComplexMatrix a(size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) a(i, j) = sampler.complex_normal();
      const ComplexMatrix s = a + a.transpose();
      const TakagiResult t = takagi(s);
      RealVector lam(size);
      for (int i = 0; i < size; ++i) lam(i) = t.lambdas[i];
      const ComplexMatrix rebuilt = t.v.conjugate() * lam.cast<Complex>().asDiagonal() * t.v.adjoint();
      tk = std::max({tk, max_abs(rebuilt - s), unitarity_defect(t.v)});
    }
    r.pass = jac <= tol::kJacobianRelative && met <= tol::kMetricFd && tk <= tol::kTakagi;
    r.detail = "Jacobian vs central differences " + sci(jac) + " (" + std::to_string(keys.size()) +
               " maps x 20 points), metric vs ddbar log rho " + sci(met) + " (3 domains x 20 points), Takagi rebuild " +
               sci(tk) + " (100 matrices, sizes 1..8)";
  });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
  return {check_isometry_constants(cfg), check_nonisometry_separation(cfg), check_classification_round_trip(cfg),
          check_witnesses(cfg),          check_signatures(cfg),             check_group_invariance(cfg),
          check_jets(cfg),               check_oracles(cfg)};
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << " (" << secs << " s)";
  return os.str();
}

}  // namespace lieball
