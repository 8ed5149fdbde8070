#include "lieball/json_io.hpp"

#include <fstream>

#include "lieball/error.hpp"

namespace lieball {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<double> number_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) bad(std::string(what) + " entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::string_view kind_name(DomainKind k) {
  switch (k) {
    case DomainKind::UnitBall: return "UnitBall";
    case DomainKind::GeneralizedBall: return "GeneralizedBall";
    case DomainKind::TypeIV: return "TypeIV";
    case DomainKind::Heisenberg: return "Heisenberg";
    case DomainKind::HeisenbergSig1: return "HeisenbergSig1";
  }
  return "?";
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from(const Json& j) {
  if (!j.is_string()) bad("exact entries must be rational strings");
  try {
    mpq_class q(j.get<std::string>());
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    bad("invalid rational '" + j.get<std::string>() + "'");
  }
}

template <class M>
Json dense_to_json(const M& m, bool complex_values) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex v = complex_values ? Complex(m(r, c)) : Complex(std::real(m(r, c)), 0.0);
      re.push_back(v.real());
      im.push_back(v.imag());
    }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

Json steps_to_json(const std::vector<NormalizationStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) {
    Json j{{"kind", s.kind}, {"note", s.note}};
    j["pre"] = s.pre ? automorphism_to_json(*s.pre) : Json(nullptr);
    j["post"] = s.post ? automorphism_to_json(*s.post) : Json(nullptr);
    out.push_back(j);
  }
  return out;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) { return dense_to_json(m, true); }
Json matrix_to_json(const RealMatrix& m) { return dense_to_json(m, false); }

ComplexMatrix matrix_from_json(const Json& j) {
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  if (rows < 0 || cols < 0) bad("negative matrix shape");
  const auto re = number_list(field(j, "re"), "re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = number_list(j.at("im"), "im");
  if (re.size() != static_cast<std::size_t>(rows) * cols || im.size() != re.size()) bad("matrix entry count mismatch");
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(re[r * cols + c], im[r * cols + c]);
  return m;
}

Json point_to_json(const Point& p) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    re.push_back(p(i).real());
    im.push_back(p(i).imag());
  }
  return Json{{"re", re}, {"im", im}};
}

Point point_from_json(const Json& j) {
  if (j.is_array()) {
    const auto re = number_list(j, "point");
    Point p(static_cast<Eigen::Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i) p(static_cast<Eigen::Index>(i)) = re[i];
    return p;
  }
  const auto re = number_list(field(j, "re"), "re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = number_list(j.at("im"), "im");
  if (im.size() != re.size()) bad("point re/im length mismatch");
  Point p(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) p(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
  return p;
}

Json domain_to_json(const DomainSpec& d) {
  return Json{{"kind", kind_name(d.kind)}, {"n", d.n}, {"l", d.l}, {"m", d.m}};
}

DomainSpec domain_from_json(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) bad("domain kind must be a string");
  const std::string kind = k.get<std::string>();
  auto get = [&](const char* key) { return j.contains(key) ? int_field(j, key) : 0; };
  try {
    if (kind == "UnitBall") return DomainSpec::unit_ball(get("n"));
    if (kind == "GeneralizedBall") return DomainSpec::generalized_ball(get("n"), get("l"));
    if (kind == "TypeIV") return DomainSpec::type_iv(get("m"));
    if (kind == "Heisenberg") return DomainSpec::heisenberg(get("n"));
    if (kind == "HeisenbergSig1") return DomainSpec::heisenberg_sig1(get("n"));
  } catch (const Error& e) {
    bad(e.what());
  }
  bad("unknown domain kind '" + kind + "'");
}

Json exact_to_json(const ExactScalar& c) {
  const Complex v = c.to_complex();
  const auto& a = c.rational_part();
  const auto& b = c.sqrt2_part();
  return Json{{"re", v.real()},
              {"im", v.imag()},
              {"exact", Json::array({rational_string(a.re), rational_string(a.im), rational_string(b.re),
                                     rational_string(b.im)})}};
}

ExactScalar exact_from_json(const Json& j) {
  if (j.is_number()) return ExactScalar::from_double(j.get<double>());
  if (j.contains("exact")) {
    const Json& e = j.at("exact");
    if (!e.is_array() || e.size() != 4) bad("exact must hold four rational strings");
    return ExactScalar(GaussRational(rational_from(e[0]), rational_from(e[1])),
                       GaussRational(rational_from(e[2]), rational_from(e[3])));
  }
  const Json& re = field(j, "re");
  if (!re.is_number()) bad("const re must be a number");
  double im = 0.0;
  if (j.contains("im")) {
    if (!j.at("im").is_number()) bad("const im must be a number");
    im = j.at("im").get<double>();
  }
  return ExactScalar::from_double(re.get<double>(), im);
}

Json expr_to_json(const HoloExpr& e) {
  const auto& node = e.node();
  auto list = [&] {
    Json a = Json::array();
    for (const auto& x : node.args) a.push_back(expr_to_json(x));
    return a;
  };
  switch (e.kind()) {
    case HoloExpr::Kind::Const: return Json{{"const", exact_to_json(node.exact)}};
    case HoloExpr::Kind::Var: return Json{{"var", node.index}};
    case HoloExpr::Kind::Add: return Json{{"add", list()}};
    case HoloExpr::Kind::Mul: return Json{{"mul", list()}};
    case HoloExpr::Kind::Neg: return Json{{"neg", expr_to_json(node.args.at(0))}};
    case HoloExpr::Kind::Div: return Json{{"div", list()}};
    case HoloExpr::Kind::Sqrt: return Json{{"sqrt", expr_to_json(node.args.at(0))}};
    case HoloExpr::Kind::Pow: return Json{{"pow", Json::array({expr_to_json(node.args.at(0)), node.power})}};
  }
  bad("unknown expression kind");
}

HoloExpr expr_from_json(const Json& j) {
  if (j.is_number()) return HoloExpr::constant(ExactScalar::from_double(j.get<double>()));
  if (!j.is_object() || j.size() != 1) bad("expression node must be an object with one key");
  const auto& [key, val] = *j.items().begin();
  auto list = [&](std::size_t min_size) {
    if (!val.is_array() || val.size() < min_size) bad("'" + key + "' needs an argument list");
    std::vector<HoloExpr> out;
    for (const auto& x : val) out.push_back(expr_from_json(x));
    return out;
  };
  if (key == "const") return HoloExpr::constant(exact_from_json(val));
  if (key == "var") {
    if (!val.is_number_integer() || val.get<int>() < 0) bad("var index must be a nonnegative integer");
    return HoloExpr::var(val.get<int>());
  }
  if (key == "add") return HoloExpr::add(list(1));
  if (key == "mul") return HoloExpr::mul(list(1));
  if (key == "neg") return HoloExpr::neg(expr_from_json(val));
  if (key == "div") {
    auto args = list(2);
    if (args.size() != 2) bad("div takes exactly two arguments");
    return HoloExpr::div(args[0], args[1]);
  }
  if (key == "sqrt") return HoloExpr::sqrt(expr_from_json(val));
  if (key == "pow") {
    if (!val.is_array() || val.size() != 2 || !val[1].is_number_integer() || val[1].get<int>() < 0)
      bad("pow takes [expr, natural]");
    return HoloExpr::pow(expr_from_json(val[0]), val[1].get<int>());
  }
  bad("unknown expression node '" + key + "'");
}

Json map_to_json(const HoloMap& f) {
  Json comps = Json::array();
  for (const auto& c : f.components) comps.push_back(expr_to_json(c));
  return Json{{"name", f.name}, {"source", domain_to_json(f.source)}, {"target", domain_to_json(f.target)},
              {"components", comps}};
}

HoloMap map_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return catalog_build(j.get<std::string>());
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  HoloMap f;
  if (j.contains("name") && j.at("name").is_string()) f.name = j.at("name").get<std::string>();
  f.source = domain_from_json(field(j, "source"));
  f.target = domain_from_json(field(j, "target"));
  const Json& comps = field(j, "components");
  if (!comps.is_array()) bad("components must be an array");
  for (const auto& c : comps) f.components.push_back(expr_from_json(c));
  try {
    f.validate();
  } catch (const Error& e) {
    bad(e.what());
  }
  return f;
}

Json automorphism_to_json(const Automorphism& a) {
  return Json{{"group", {{"name", to_string(a.kind())}, {"domain", domain_to_json(a.domain())}}},
              {"matrix", matrix_to_json(a.matrix())},
              {"defect", a.defect()}};
}

Automorphism automorphism_from_json(const Json& j) {
  const Json& g = field(j, "group");
  const DomainSpec d = domain_from_json(g.is_object() && g.contains("domain") ? g.at("domain") : g);
  return Automorphism::for_domain(d, matrix_from_json(field(j, "matrix")));
}

Json form_to_json(const HermitianForm& h) {
  Json mons = Json::array();
  for (const auto& m : h.basis()) mons.push_back(m);
  return Json{{"n", h.nvars()}, {"monomials", mons}, {"coeff", matrix_to_json(h.matrix())}};
}

HermitianForm form_from_json(const Json& j) {
  const int n = int_field(j, "n");
  if (n < 1) bad("form needs n >= 1");
  const Json& mons = field(j, "monomials");
  if (!mons.is_array()) bad("monomials must be an array");
  std::vector<Monomial> basis;
  for (const auto& m : mons) {
    if (!m.is_array() || static_cast<int>(m.size()) != n) bad("each monomial needs n exponents");
    Monomial e;
    for (const auto& x : m) {
      if (!x.is_number_integer() || x.get<int>() < 0) bad("exponents must be natural numbers");
      e.push_back(x.get<int>());
    }
    basis.push_back(e);
  }
  const ComplexMatrix c = matrix_from_json(field(j, "coeff"));
  if (c.rows() != static_cast<Eigen::Index>(basis.size()) || c.cols() != c.rows()) bad("coeff shape mismatch");
  BiPoly p(n);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      p.add_term({basis[a], basis[b]}, ExactScalar::from_complex(c(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))));
  return HermitianForm(p);
}

Json series_to_json(const ExactSeries& s, const std::vector<std::string>& names) {
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back(Json{{"exponents", m}, {"coeff", exact_to_json(c)}});
  return Json{{"variables", names}, {"weights", s.weights()}, {"order", s.order()}, {"terms", terms}};
}

Json to_json(const IsometryVerdict& v) {
  return Json{{"lambda", v.lambda},         {"samples", v.samples}, {"seed", v.seed},
              {"max_residual", v.max_residual}, {"max_abs_residual", v.max_abs_residual},
              {"tol", v.tol},               {"pass", v.pass},       {"skipped", v.skipped}};
}

Json to_json(const ProperVerdict& v) {
  return Json{{"samples", v.samples},
              {"seed", v.seed},
              {"boundary_residual", v.boundary_residual},
              {"interior_failures", v.interior_failures},
              {"tol", v.tol},
              {"pass", v.pass},
              {"skipped", v.skipped}};
}

Json to_json(const SignatureResult& s) { return Json{{"pos", s.positives}, {"neg", s.negatives}, {"zero", s.zeros}}; }

Json to_json(const CanonicalForm& c) {
  return Json{{"n", c.n},
              {"case", c.tag == CaseTag::Rational ? "rational" : "irrational"},
              {"beta", c.beta},
              {"theta_raw", c.theta_raw},
              {"margin", c.margin},
              {"final_class", c.final_class()},
              {"final_residual", c.final_residual},
              {"u_final", matrix_to_json(c.u_final)},
              {"transforms", steps_to_json(c.steps)}};
}

Json to_json(const WitnessPair& w) { return Json{{"b", matrix_to_json(w.b)}, {"t", matrix_to_json(w.t)}}; }

Json to_json(const Classification& c) {
  Json j = to_json(c.form);
  j["extraction"] = Json{{"u", matrix_to_json(c.extraction.u)},
                         {"probe_residual", c.extraction.probe_residual},
                         {"kernel_residual", c.extraction.kernel_residual}};
  j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  return j;
}

Json to_json(const MappingResidual& r, int n) {
  Json parts = Json::array();
  const auto names = restricted_names(n);
  for (std::size_t k = 0; k < r.parts.size(); ++k)
    parts.push_back(Json{{"weight", k}, {"zero", r.parts[k].is_zero()}, {"text", to_string(r.parts[k], names)},
                         {"series", series_to_json(r.parts[k], names)}});
  return Json{{"order", r.order}, {"vanishes", r.vanishes()}, {"first_nonzero", r.first_nonzero()}, {"parts", parts}};
}

Json to_json(const NormalFormReport& r, int n) {
  Json a1 = Json::array(), phi2 = Json::array();
  for (const auto& a : r.a1) a1.push_back(to_string(a, jet_names(n)));
  for (const auto& p : r.phi2) phi2.push_back(to_string(p, jet_names(n)));
  return Json{{"mapping_vanishes", r.mapping_vanishes},
              {"a1", a1},
              {"phi2", phi2},
              {"phi2_depends_on_w", r.phi2_depends_on_w},
              {"constraint_lhs", to_string(r.lhs, restricted_names(n))},
              {"constraint_rhs", to_string(r.rhs, restricted_names(n))},
              {"constraint_holds", r.constraint_holds}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace lieball
