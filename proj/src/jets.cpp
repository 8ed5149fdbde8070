#include "lieball/jets.hpp"

#include <map>
#include <sstream>

#include "lieball/error.hpp"

namespace lieball {

namespace {

ExactScalar rat(long p, long q = 1) { return ExactScalar::rational(p, q); }

void require_heisenberg_map(const HoloMap& f) {
  if (f.source.kind != DomainKind::Heisenberg)
    throw Error(ErrorCode::DomainMismatch, "jets need a Heisenberg(n) source, got " + f.source.to_string());
  if (f.target.kind != DomainKind::HeisenbergSig1 && f.target.kind != DomainKind::Heisenberg)
    throw Error(ErrorCode::DomainMismatch, "jets need a Heisenberg model target, got " + f.target.to_string());
  if (static_cast<int>(f.components.size()) != f.target.dimension())
    throw Error(ErrorCode::DimensionMismatch, "component count");
}

// |z|^2 = sum z_j zbar_j in restricted variables.
ExactSeries hermitian_square(int n, int order) {
  const auto weights = restricted_weights(n);
  ExactSeries s(weights, order);
  for (int j = 0; j < n - 1; ++j) {
    Monomial m(weights.size(), 0);
    m[j] = 1;
    m[n - 1 + j] = 1;
    s.add_term(m, rat(1));
  }
  return s;
}

// Substitution values for (z, w) in restricted variables.
std::vector<ExactSeries> restriction_values(int n, int order, bool conjugate) {
  const auto weights = restricted_weights(n);
  std::vector<ExactSeries> vals;
  for (int j = 0; j < n - 1; ++j)
    vals.push_back(ExactSeries::variable(weights, order, conjugate ? n - 1 + j : j));
  const ExactScalar i = ExactScalar::imag_unit();
  const ExactScalar sign = conjugate ? -i : i;
  vals.push_back(ExactSeries::variable(weights, order, 2 * (n - 1)) + sign * hermitian_square(n, order));
  return vals;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::vector<int> heisenberg_weights(int n) {
  std::vector<int> w(n - 1, 1);
  w.push_back(2);
  return w;
}

std::vector<int> restricted_weights(int n) {
  std::vector<int> w(2 * (n - 1), 1);
  w.push_back(2);
  return w;
}

WeightedSeries expand(const HoloExpr& e, int n, int order) {
  return expand_series<ExactScalar>(e, heisenberg_weights(n), order);
}

ExactSeries restrict_to_heisenberg(const WeightedSeries& h) {
  const int n = static_cast<int>(h.nvars());
  const auto vals = restriction_values(n, h.order(), false);
  return h.compose(vals);
}

ExactSeries restrict_conjugate(const WeightedSeries& h) {
  const int n = static_cast<int>(h.nvars());
  const auto vals = restriction_values(n, h.order(), true);
  return h.conj_coefficients().compose(vals);
}

bool MappingResidual::vanishes() const { return first_nonzero() < 0; }

int MappingResidual::first_nonzero() const {
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (!parts[k].is_zero()) return static_cast<int>(k);
  return -1;
}

MappingResidual mapping_residual(const HoloMap& f, int order) {
  require_heisenberg_map(f);
  if (order < 0) throw Error(ErrorCode::ParameterOutOfRange, "order must be nonnegative");
  const int n = f.source.n;
  const int big_n = f.target.dimension();
  const bool sig1 = f.target.kind == DomainKind::HeisenbergSig1;

  std::vector<ExactSeries> hol, anti;
  for (const auto& c : f.components) {
    const WeightedSeries s = expand(c, n, order);
    hol.push_back(restrict_to_heisenberg(s));
    anti.push_back(restrict_conjugate(s));
  }
  const ExactScalar i = ExactScalar::imag_unit();
  // -(g - gbar)/(2i) = (i/2)(g - gbar)
  ExactSeries rho = (i * rat(1, 2)) * (hol[big_n - 1] - anti[big_n - 1]);
  for (int j = 0; j < big_n - 1; ++j) {
    const ExactSeries sq = hol[j] * anti[j];
    rho = (sig1 && j == big_n - 2) ? rho - sq : rho + sq;
  }
  MappingResidual out;
  out.order = order;
  for (int k = 0; k <= order; ++k) out.parts.push_back(rho.homogeneous_part(k));
  return out;
}

NormalFormReport normal_form_check(const HoloMap& f, int order) {
  require_heisenberg_map(f);
  const int n = f.source.n;
  const int big_n = f.target.dimension();
  if (big_n < n + 1) throw Error(ErrorCode::DimensionMismatch, "normal form needs N >= n + 1");
  order = std::max(order, 4);
  const auto weights = heisenberg_weights(n);
  const auto names = jet_names(n);
  NormalFormReport rep;
  rep.mapping_vanishes = mapping_residual(f, order).vanishes();

  auto violation = [&](int comp, const ExactSeries& part, const std::string& what) {
    const auto& [m, c] = *part.terms().begin();
    throw Error(ErrorCode::NotNormalForm, "component " + std::to_string(comp + 1) + ": " + what + " (" + c.to_string() +
                                              " * " + monomial_string(m, names) + ")");
  };
  const ExactScalar i = ExactScalar::imag_unit();

  for (int j = 0; j < n - 1; ++j) {
    const WeightedSeries s = expand(f.components[j], n, 3) - WeightedSeries::variable(weights, 3, j);
    for (int k = 0; k <= 2; ++k)
      if (!s.homogeneous_part(k).is_zero()) violation(j, s.homogeneous_part(k), "f - z has weighted degree " + std::to_string(k));
    const ExactSeries p3 = s.homogeneous_part(3);
    ExactSeries a(weights, 1);
    for (const auto& [m, c] : p3.terms()) {
      if (m[n - 1] != 1) violation(j, p3, "weighted degree 3 part of f is not linear(z) * w");
      Monomial lin = m;
      lin[n - 1] = 0;
      a.add_term(lin, -(rat(2) * i) * c);
    }
    rep.a1.push_back(a);
  }
  for (int j = n - 1; j < big_n - 1; ++j) {
    const WeightedSeries s = expand(f.components[j], n, 2);
    for (int k = 0; k <= 1; ++k)
      if (!s.homogeneous_part(k).is_zero()) violation(j, s.homogeneous_part(k), "phi has weighted degree " + std::to_string(k));
    const ExactSeries p2 = s.homogeneous_part(2);
    for (const auto& [m, c] : p2.terms())
      if (m[n - 1] != 0) rep.phi2_depends_on_w = true;
    rep.phi2.push_back(p2);
  }
  {
    const int j = big_n - 1;
    const WeightedSeries s = expand(f.components[j], n, 4) - WeightedSeries::variable(weights, 4, n - 1);
    for (int k = 0; k <= 4; ++k)
      if (!s.homogeneous_part(k).is_zero()) violation(j, s.homogeneous_part(k), "g - w has weighted degree " + std::to_string(k));
  }

  const int rorder = 4;
  const auto rw = restricted_weights(n);
  const ExactSeries zz = hermitian_square(n, rorder);
  ExactSeries pairing(rw, rorder);
  for (int j = 0; j < n - 1; ++j) {
    const ExactSeries a = restrict_to_heisenberg(rep.a1[j].truncated(rorder));
    pairing = pairing + a * ExactSeries::variable(rw, rorder, n - 1 + j);
  }
  rep.lhs = pairing * zz;
  rep.rhs = ExactSeries(rw, rorder);
  const bool sig1 = f.target.kind == DomainKind::HeisenbergSig1;
  for (std::size_t j = 0; j < rep.phi2.size(); ++j) {
    const WeightedSeries p = rep.phi2[j].truncated(rorder);
    const ExactSeries sq = restrict_to_heisenberg(p) * restrict_conjugate(p);
    rep.rhs = (sig1 && j + 1 == rep.phi2.size()) ? rep.rhs - sq : rep.rhs + sq;
  }
  rep.constraint_holds = (rep.lhs - rep.rhs).is_zero();
  return rep;
}

HoloMap heisenberg_embedding(int n, int big_n) {
  if (n < 2 || big_n < n + 1) throw Error(ErrorCode::ParameterOutOfRange, "embedding needs 2 <= n < N");
  HoloMap f{"heis-linear:n=" + std::to_string(n) + ",N=" + std::to_string(big_n), DomainSpec::heisenberg(n),
            DomainSpec::heisenberg_sig1(big_n), {}};
  for (int j = 0; j < n - 1; ++j) f.components.push_back(HoloExpr::var(j));
  for (int j = n - 1; j < big_n - 1; ++j) f.components.push_back(HoloExpr::constant(rat(0)));
  f.components.push_back(HoloExpr::var(n - 1));
  return f;
}

HoloMap heisenberg_psi_map(int n, int big_n, const HoloExpr& psi) {
  if (n < 2 || big_n < n + 2) throw Error(ErrorCode::ParameterOutOfRange, "psi map needs N >= n + 2");
  if (psi.max_var() >= n) throw Error(ErrorCode::DimensionMismatch, "psi uses variables outside the source");
  HoloMap f = heisenberg_embedding(n, big_n);
  f.name = "heis-psi:n=" + std::to_string(n) + ",N=" + std::to_string(big_n) + ",psi=" + psi.to_string();
  f.components[big_n - 3] = psi;
  f.components[big_n - 2] = psi;
  return f;
}

HoloMap cayley_transported_embedding(int n, int big_n, const ExactScalar& c, const ExactScalar& s) {
  if (n < 2 || big_n < n + 1) throw Error(ErrorCode::ParameterOutOfRange, "embedding needs 2 <= n < N");
  if (!(c * c - s * s - rat(1)).is_zero()) throw Error(ErrorCode::ParameterOutOfRange, "boost needs c^2 - s^2 = 1");
  using E = HoloExpr;
  const E one = E::constant(rat(1));
  const E i = E::constant(ExactScalar::imag_unit());
  const E w = E::var(n - 1);
  // Heisenberg(n) -> UnitBall(n): xi = 2z/(1 - iw), eta = (1 + iw)/(1 - iw).
  const E den = one - i * w;
  std::vector<E> xi;
  for (int j = 0; j < n - 1; ++j) xi.push_back(E::constant(rat(2)) * E::var(j) / den);
  const E eta = (one + i * w) / den;
  // Boost on (eta, 1), then the slot layout (X; Z_1..Z_{N-2}, W) of GeneralizedBall(N-1, 1) with X = 0.
  const E bden = E::constant(s) * eta + E::constant(c);
  const E eta2 = (E::constant(c) * eta + E::constant(s)) / bden;
  // Inverse Cayley: z'_j = Z_j/(1 + W), z'_{N-1} = X/(1 + W), w' = i(1 - W)/(1 + W).
  const E iden = one + eta2;
  HoloMap f{"heis-cayley:n=" + std::to_string(n) + ",N=" + std::to_string(big_n) + ",c=" + c.to_string() +
                ",s=" + s.to_string(),
            DomainSpec::heisenberg(n), DomainSpec::heisenberg_sig1(big_n), {}};
  for (int j = 0; j < n - 1; ++j) f.components.push_back((xi[j] / bden) / iden);
  for (int j = n - 1; j < big_n - 1; ++j) f.components.push_back(E::constant(rat(0)));
  f.components.push_back(i * (one - eta2) / iden);
  return f;
}

HoloMap jet_catalog_build(const std::string& key) {
  const auto colon = key.find(':');
  const std::string family = key.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon != std::string::npos) {
    std::stringstream ss(key.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "jet key parameter '" + item + "'");
      params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  auto integer = [&](const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end()) throw Error(ErrorCode::ParseError, "jet key needs '" + name + "'");
    try {
      std::size_t used = 0;
      const int v = std::stoi(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "jet key parameter '" + name + "' is not an integer");
    }
  };
  const int n = integer("n");
  const int big_n = integer("N");
  if (family == "heis-linear") return heisenberg_embedding(n, big_n);
  if (family == "heis-cayley") return cayley_transported_embedding(n, big_n, rat(5, 4), rat(3, 4));
  if (family == "heis-psi") {
    const auto it = params.find("psi");
    const std::string psi = it == params.end() ? "z1^2" : it->second;
    if (psi == "z1^2") return heisenberg_psi_map(n, big_n, HoloExpr::pow(HoloExpr::var(0), 2));
    if (psi == "z1*z2") {
      if (n < 3) throw Error(ErrorCode::ParameterOutOfRange, "psi = z1*z2 needs n >= 3");
      return heisenberg_psi_map(n, big_n, HoloExpr::var(0) * HoloExpr::var(1));
    }
    if (psi == "w") return heisenberg_psi_map(n, big_n, HoloExpr::var(n - 1));
    throw Error(ErrorCode::ParseError, "psi must be z1^2, z1*z2 or w");
  }
  throw Error(ErrorCode::ParseError, "unknown jet family '" + family + "'");
}

std::vector<std::string> jet_names(int n) {
  std::vector<std::string> names;
  for (int j = 1; j < n; ++j) names.push_back("z" + std::to_string(j));
  names.push_back("w");
  return names;
}

std::vector<std::string> restricted_names(int n) {
  std::vector<std::string> names;
  for (int j = 1; j < n; ++j) names.push_back("z" + std::to_string(j));
  for (int j = 1; j < n; ++j) names.push_back("zb" + std::to_string(j));
  names.push_back("u");
  return names;
}

std::string to_string(const ExactSeries& s, const std::vector<std::string>& names) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    std::string coeff = c.to_string();
    const bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomial_string(m, names);
    if (mono == "1") os << coeff;
    else if (coeff == "1") os << mono;
    else os << coeff << "*" << mono;
  }
  return os.str();
}

}  // namespace lieball
