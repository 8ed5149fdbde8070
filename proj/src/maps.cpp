#include "lieball/maps.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "lieball/error.hpp"

namespace lieball {

namespace {

using E = HoloExpr;

E c(const ExactScalar& v) { return E::constant(v); }
E c(double v) { return E::constant(v); }
E z(int j) { return E::var(j); }

const ExactScalar kHalf = ExactScalar::rational(1, 2);
const ExactScalar kSqrt2 = ExactScalar::sqrt2();
const ExactScalar kI = ExactScalar::imag_unit();

E sum_squares(int from, int to) {
  std::vector<E> terms;
  for (int j = from; j < to; ++j) terms.push_back(E::pow(z(j), 2));
  return E::add(std::move(terms));
}

E sum_squares(const std::vector<E>& es) {
  std::vector<E> terms;
  for (const auto& e : es) terms.push_back(E::pow(e, 2));
  return E::add(std::move(terms));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ParameterOutOfRange, what);
}

HoloMap riv(int n) {
  require(n >= 2, "RIV needs n >= 2");
  HoloMap f{"RIV:n=" + std::to_string(n), DomainSpec::unit_ball(n), DomainSpec::type_iv(n + 1), {}};
  for (int j = 0; j < n - 1; ++j) f.components.push_back(z(j));
  const E s = sum_squares(0, n - 1);
  const E zn = z(n - 1);
  const E half_s = c(kHalf) * s;
  const E p_n = half_s - E::pow(zn, 2) + zn;
  const E p_n1 = c(-kI) * (half_s + E::pow(zn, 2) - zn);
  const E q = c(kSqrt2) * (c(1.0) - zn);
  f.components.push_back(p_n / q);
  f.components.push_back(p_n1 / q);
  return f;
}

HoloMap izero(int n) {
  require(n >= 1, "Izero needs n >= 1");
  HoloMap f{"Izero:n=" + std::to_string(n), DomainSpec::unit_ball(n), DomainSpec::type_iv(n + 1), {}};
  for (int j = 0; j < n - 1; ++j) f.components.push_back(z(j));
  f.components.push_back(c(1.0) - E::sqrt(c(1.0) - sum_squares(0, n)));
  f.components.push_back(z(n - 1));
  return f;
}

HoloMap lembed(int m) {
  require(m >= 2, "L needs m >= 2");
  HoloMap f{"L:m=" + std::to_string(m), DomainSpec::type_iv(m), DomainSpec::generalized_ball(m, 1), {}};
  f.components.push_back(c(kHalf) * sum_squares(0, m));
  for (int j = 0; j < m; ++j) f.components.push_back(z(j));
  return f;
}

HoloMap flat(int n, int m) {
  require(n >= 1 && m >= n + 2, "flat needs m >= n + 2");
  HoloMap f{"flat:n=" + std::to_string(n) + ",m=" + std::to_string(m), DomainSpec::unit_ball(n),
            DomainSpec::type_iv(m), {}};
  for (int j = 0; j < n; ++j) f.components.push_back(z(j));
  const E s = sum_squares(0, n);
  const ExactScalar quarter = ExactScalar::rational(1, 4);
  f.components.push_back(c(kSqrt2 * quarter) * s);
  f.components.push_back(c(kI * kSqrt2 * quarter) * s);
  for (int j = n + 2; j < m; ++j) f.components.push_back(c(0.0));
  return f;
}

HoloMap whitney_iv(int n) {
  require(n >= 2, "whitneyIV needs n >= 2");
  HoloMap h{"whitney", DomainSpec::unit_ball(n), DomainSpec::unit_ball(2 * n - 1), {}};
  for (int j = 0; j < n - 1; ++j) h.components.push_back(z(j));
  for (int j = 0; j < n; ++j) h.components.push_back(z(j) * z(n - 1));
  HoloMap f = sqrt_extension(h);
  f.name = "whitneyIV:n=" + std::to_string(n);
  return f;
}

HoloMap gk(int k) {
  require(k >= 1, "Gk needs k >= 1");
  HoloMap f{"Gk:k=" + std::to_string(k), DomainSpec::unit_ball(1), DomainSpec::type_iv(2), {}};
  f.components.push_back(E::pow(z(0), k));
  f.components.push_back(c(1.0) - E::sqrt(c(1.0) - E::pow(z(0), 2 * k)));
  return f;
}

HoloMap psi_degenerate(int m, int n, const std::optional<HoloExpr>& psi) {
  require(m >= 3 && n >= 1, "psi needs m >= 3, n >= 1");
  const E p = psi ? *psi : z(0);
  require(p.max_var() < n, "psi uses variables beyond the source dimension");
  HoloMap f{"psi:m=" + std::to_string(m) + ",n=" + std::to_string(n), DomainSpec::unit_ball(n),
            DomainSpec::type_iv(m), {}};
  const ExactScalar inv_sqrt2 = kSqrt2 * kHalf;
  f.components.push_back(c(inv_sqrt2) * (c(1.0) + p));
  f.components.push_back(c(-kI * inv_sqrt2) * (c(1.0) - p));
  for (int j = 2; j < m; ++j) f.components.push_back(c(0.0));
  return f;
}

HoloMap exhp0(int n) {
  require(n >= 2, "exhp0 needs n >= 2");
  HoloMap f{"exhp0:n=" + std::to_string(n), DomainSpec::unit_ball(n), DomainSpec::type_iv(4 * n - 1), {}};
  const ExactScalar r = kSqrt2 * kHalf;          // 1/sqrt 2
  const ExactScalar ri = -kI * kSqrt2 * kHalf;   // 1/sqrt(-2)
  const ExactScalar quarter = ExactScalar::rational(1, 4);
  const ExactScalar s = kSqrt2 * quarter;        // 1/(2 sqrt 2)
  const ExactScalar si = -kI * kSqrt2 * quarter; // 1/(2 sqrt(-2))
  const E zn = z(n - 1);
  f.components.push_back(zn);
  for (int j = 0; j < n - 1; ++j) {
    f.components.push_back(c(r) * z(j));
    f.components.push_back(c(ri) * z(j));
  }
  for (int j = 0; j < n - 1; ++j) {
    const E t = z(j) * E::pow(zn, 2);
    f.components.push_back(c(s) * t);
    f.components.push_back(c(si) * t);
  }
  f.components.push_back(c(s) * E::pow(zn, 3));
  f.components.push_back(c(si) * E::pow(zn, 3));
  return f;
}

HoloMap class_b(int n) {
  require(n >= 1, "classB needs n >= 1");
  HoloMap h{"id", DomainSpec::unit_ball(n), DomainSpec::unit_ball(n), {}};
  for (int j = 0; j < n; ++j) h.components.push_back(z(j));
  HoloMap f = sqrt_extension(h);
  f.name = "classB:n=" + std::to_string(n);
  return f;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

void HoloMap::validate() const {
  source.validate();
  target.validate();
  if (static_cast<int>(components.size()) != target.dimension())
    throw Error(ErrorCode::DimensionMismatch, "component count " + std::to_string(components.size()) +
                                                  " vs target " + target.to_string());
  for (const auto& e : components)
    if (e.max_var() >= arity()) throw Error(ErrorCode::DimensionMismatch, "component uses a variable beyond the source");
}

Point eval(const HoloMap& f, const Point& zp, const EvalOptions& opt) {
  if (zp.size() != f.arity()) throw Error(ErrorCode::DimensionMismatch, "point size for " + f.source.to_string());
  const auto v = evaluate(f.components, std::span<const Complex>(zp.data(), zp.size()), opt);
  return Eigen::Map<const ComplexVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

ComplexMatrix jacobian(const HoloMap& f, const Point& zp, const EvalOptions& opt) {
  if (zp.size() != f.arity()) throw Error(ErrorCode::DimensionMismatch, "point size for " + f.source.to_string());
  const auto vg = evaluate_with_gradient(f.components, std::span<const Complex>(zp.data(), zp.size()), opt);
  ComplexMatrix j(f.arity(), static_cast<Eigen::Index>(f.components.size()));
  for (std::size_t a = 0; a < vg.grads.size(); ++a) j.col(static_cast<Eigen::Index>(a)) = vg.grads[a];
  return j;
}

double kernel_identity_residual(const HoloMap& f, const Point& zp, int p) {
  if (f.source.kind != DomainKind::UnitBall || f.target.kind != DomainKind::TypeIV)
    throw Error(ErrorCode::DomainMismatch, "kernel identity needs UnitBall -> TypeIV");
  const Point w = eval(f, zp);
  const double lhs = std::pow(1.0 - zp.squaredNorm(), p);
  const double rhs = 1.0 - w.squaredNorm() + 0.25 * std::norm((w.transpose() * w)(0, 0));
  return std::abs(lhs - rhs);
}

HoloMap compose_autos(const std::optional<Automorphism>& pre, const HoloMap& f,
                      const std::optional<Automorphism>& post) {
  HoloMap out = f;
  if (pre) {
    if (!(pre->domain() == f.source)) throw Error(ErrorCode::DomainMismatch, "pre-automorphism domain");
    std::vector<HoloExpr> vars;
    for (int j = 0; j < f.arity(); ++j) vars.push_back(z(j));
    const auto moved = apply_exprs(*pre, vars);
    out.components = substitute(out.components, moved);
  }
  if (post) {
    if (!(post->domain() == f.target)) throw Error(ErrorCode::DomainMismatch, "post-automorphism domain");
    out.components = apply_exprs(*post, out.components);
  }
  out.name = f.name.empty() ? "" : "composed(" + f.name + ")";
  return out;
}

HoloMap precompose_linear(const HoloMap& f, const ComplexMatrix& v) {
  const int n = f.arity();
  if (v.rows() != n || v.cols() != n) throw Error(ErrorCode::DimensionMismatch, "source change size");
  std::vector<HoloExpr> moved;
  for (int col = 0; col < n; ++col) {
    std::vector<HoloExpr> terms;
    for (int r = 0; r < n; ++r)
      if (v(r, col) != Complex(0.0, 0.0)) terms.push_back(E::constant(v(r, col)) * z(r));
    moved.push_back(E::add(std::move(terms)));
  }
  HoloMap out = f;
  out.components = substitute(f.components, moved);
  return out;
}

HoloMap postcompose_linear(const HoloMap& f, const ComplexMatrix& m, const DomainSpec& target) {
  if (m.rows() != static_cast<Eigen::Index>(f.components.size()) || m.cols() != target.dimension())
    throw Error(ErrorCode::DimensionMismatch, "target change size");
  HoloMap out{f.name, f.source, target, {}};
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    std::vector<HoloExpr> terms;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, col) != Complex(0.0, 0.0)) terms.push_back(E::constant(m(r, col)) * f.components[r]);
    out.components.push_back(E::add(std::move(terms)));
  }
  return out;
}

HoloMap itheta_map(int n, double theta) {
  require(n >= 1, "Itheta needs n >= 1");
  const double c2 = std::cos(2.0 * theta);
  require(std::abs(c2) > 1e-12, "Itheta needs cos(2 theta) != 0");
  HoloMap f{"Itheta:n=" + std::to_string(n) + ",theta=" + format_double(theta), DomainSpec::unit_ball(n),
            DomainSpec::type_iv(n + 1), {}};
  for (int j = 0; j < n - 1; ++j) f.components.push_back(z(j));
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const E zn = z(n - 1);
  const E h = c(1.0) + E::constant(Complex(0.0, 2.0 * std::sin(2.0 * theta))) * zn - E::pow(zn, 2) -
              c(c2) * sum_squares(0, n - 1);
  const E root = E::sqrt(h);
  const E inv = c(1.0 / c2);
  f.components.push_back(inv * ((c(ct) + E::constant(Complex(0.0, st)) * zn) - c(ct) * root));
  f.components.push_back(inv * ((E::constant(Complex(0.0, -st)) + c(ct) * zn) + E::constant(Complex(0.0, st)) * root));
  return f;
}

HoloMap riv_flipped(int n) {
  HoloMap f = riv(n);
  f.components.back() = -f.components.back();
  f.name = "RIVflip:n=" + std::to_string(n);
  return f;
}

HoloMap sqrt_extension(const HoloMap& h) {
  if (h.source.kind != DomainKind::UnitBall) throw Error(ErrorCode::DomainMismatch, "sqrt extension needs a ball source");
  HoloMap f{h.name, h.source, DomainSpec::type_iv(static_cast<int>(h.components.size()) + 1), h.components};
  f.components.push_back(c(1.0) - E::sqrt(c(1.0) - sum_squares(h.components)));
  return f;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::RIV: return "RIV";
    case Family::Itheta: return "Itheta";
    case Family::Izero: return "Izero";
    case Family::Lembed: return "L";
    case Family::Flat: return "flat";
    case Family::WhitneyIV: return "whitneyIV";
    case Family::Gk: return "Gk";
    case Family::PsiDegenerate: return "psi";
    case Family::Exhp0: return "exhp0";
    case Family::ClassB: return "classB";
  }
  return "?";
}

std::vector<std::string> catalog_families() {
  return {"RIV:n", "Itheta:n,theta", "Izero:n", "L:m", "flat:n,m", "whitneyIV:n", "Gk:k", "psi:m,n", "exhp0:n", "classB:n"};
}

double parse_angle(const std::string& text) {
  const auto pos = text.find("pi");
  try {
    if (pos == std::string::npos) {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used != text.size()) throw Error(ErrorCode::ParseError, "angle '" + text + "'");
      return v;
    }
    double factor = 1.0;
    const std::string head = text.substr(0, pos);
    if (head == "-")
      factor = -1.0;
    else if (!head.empty()) {
      std::string h = head;
      if (h.back() == '*') h.pop_back();
      std::size_t used = 0;
      factor = std::stod(h, &used);
      if (used != h.size()) throw Error(ErrorCode::ParseError, "angle '" + text + "'");
    }
    double den = 1.0;
    const std::string tail = text.substr(pos + 2);
    if (!tail.empty()) {
      if (tail.front() != '/') throw Error(ErrorCode::ParseError, "angle '" + text + "'");
      std::size_t used = 0;
      den = std::stod(tail.substr(1), &used);
      if (used != tail.size() - 1 || den == 0.0) throw Error(ErrorCode::ParseError, "angle '" + text + "'");
    }
    return factor * std::numbers::pi / den;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "angle '" + text + "'");
  }
}

CatalogKey parse_catalog_key(const std::string& text) {
  const auto colon = text.find(':');
  const std::string fam = text.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "catalog parameter '" + item + "'");
      params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  auto get_int = [&](const std::string& name, int fallback, bool required) {
    auto it = params.find(name);
    if (it == params.end()) {
      if (required) throw Error(ErrorCode::ParseError, "catalog key '" + text + "' needs " + name);
      return fallback;
    }
    try {
      std::size_t used = 0;
      const int v = std::stoi(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "integer parameter " + name + "=" + it->second);
    }
  };
  CatalogKey k;
  if (fam == "RIV") {
    k.family = Family::RIV;
    k.n = get_int("n", 0, true);
  } else if (fam == "Itheta") {
    k.family = Family::Itheta;
    k.n = get_int("n", 0, true);
    auto it = params.find("theta");
    if (it == params.end()) throw Error(ErrorCode::ParseError, "Itheta needs theta");
    k.theta = parse_angle(it->second);
  } else if (fam == "Izero") {
    k.family = Family::Izero;
    k.n = get_int("n", 0, true);
  } else if (fam == "L") {
    k.family = Family::Lembed;
    k.m = get_int("m", 0, true);
  } else if (fam == "flat") {
    k.family = Family::Flat;
    k.n = get_int("n", 0, true);
    k.m = get_int("m", 0, true);
  } else if (fam == "whitneyIV") {
    k.family = Family::WhitneyIV;
    k.n = get_int("n", 0, true);
  } else if (fam == "Gk") {
    k.family = Family::Gk;
    k.k = get_int("k", 0, true);
  } else if (fam == "psi") {
    k.family = Family::PsiDegenerate;
    k.m = get_int("m", 0, true);
    k.n = get_int("n", 2, false);
  } else if (fam == "exhp0") {
    k.family = Family::Exhp0;
    k.n = get_int("n", 0, true);
  } else if (fam == "classB") {
    k.family = Family::ClassB;
    k.n = get_int("n", 0, true);
  } else {
    throw Error(ErrorCode::ParseError, "unknown catalog family '" + fam + "'");
  }
  return k;
}

std::string to_string(const CatalogKey& k) {
  const std::string f(family_name(k.family));
  switch (k.family) {
    case Family::Itheta: return f + ":n=" + std::to_string(k.n) + ",theta=" + format_double(k.theta);
    case Family::Lembed: return f + ":m=" + std::to_string(k.m);
    case Family::Flat: return f + ":n=" + std::to_string(k.n) + ",m=" + std::to_string(k.m);
    case Family::Gk: return f + ":k=" + std::to_string(k.k);
    case Family::PsiDegenerate: return f + ":m=" + std::to_string(k.m) + ",n=" + std::to_string(k.n);
    default: return f + ":n=" + std::to_string(k.n);
  }
}

HoloMap catalog_build(const CatalogKey& k) {
  switch (k.family) {
    case Family::RIV: return riv(k.n);
    case Family::Itheta:
      require(k.n >= 1, "Itheta needs n >= 1");
      require(k.theta >= 0.0 && k.theta < std::numbers::pi / 4.0, "Itheta needs theta in [0, pi/4)");
      return itheta_map(k.n, k.theta);
    case Family::Izero: return izero(k.n);
    case Family::Lembed: return lembed(k.m);
    case Family::Flat: return flat(k.n, k.m);
    case Family::WhitneyIV: return whitney_iv(k.n);
    case Family::Gk: return gk(k.k);
    case Family::PsiDegenerate: return psi_degenerate(k.m, k.n, k.psi);
    case Family::Exhp0: return exhp0(k.n);
    case Family::ClassB: return class_b(k.n);
  }
  throw Error(ErrorCode::ParameterOutOfRange, "unknown family");
}

HoloMap catalog_build(const std::string& key) { return catalog_build(parse_catalog_key(key)); }

}  // namespace lieball
