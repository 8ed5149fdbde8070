#include "lieball/expr.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "lieball/error.hpp"

namespace lieball {

namespace {

using Node = HoloExpr::Node;
using Kind = HoloExpr::Kind;

Complex int_pow(Complex base, int k) {
  Complex result(1.0, 0.0);
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

void check_sqrt_arg(Complex u, const EvalOptions& opt, ErrorCode cut_code) {
  if (std::abs(u) <= opt.branch_tol) throw Error(ErrorCode::BranchPoint, "sqrt argument at 0");
  if (u.real() < 0.0 && std::abs(u.imag()) <= opt.branch_tol)
    throw Error(cut_code, "sqrt argument on the negative real axis");
}

void check_den(Complex d, const EvalOptions& opt) {
  if (std::abs(d) <= opt.pole_tol) throw Error(ErrorCode::Pole, "denominator vanishes");
}

class ValueEval {
 public:
  ValueEval(std::span<const Complex> z, const EvalOptions& opt) : z_(z), opt_(opt) {}

  Complex operator()(const HoloExpr& e) {
    auto it = memo_.find(e.id());
    if (it != memo_.end()) return it->second;
    const Complex v = compute(e.node());
    memo_.emplace(e.id(), v);
    return v;
  }

 private:
  Complex compute(const Node& n) {
    switch (n.kind) {
      case Kind::Const: return n.value;
      case Kind::Var:
        if (n.index < 0 || static_cast<std::size_t>(n.index) >= z_.size())
          throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
        return z_[n.index];
      case Kind::Add: {
        Complex s = 0.0;
        for (const auto& a : n.args) s += (*this)(a);
        return s;
      }
      case Kind::Mul: {
        Complex p = 1.0;
        for (const auto& a : n.args) p *= (*this)(a);
        return p;
      }
      case Kind::Neg: return -(*this)(n.args[0]);
      case Kind::Div: {
        const Complex num = (*this)(n.args[0]);
        const Complex den = (*this)(n.args[1]);
        check_den(den, opt_);
        return num / den;
      }
      case Kind::Sqrt: {
        const Complex u = (*this)(n.args[0]);
        check_sqrt_arg(u, opt_, ErrorCode::BranchCut);
        return std::sqrt(u);
      }
      case Kind::Pow: return int_pow((*this)(n.args[0]), n.power);
    }
    return 0.0;
  }

  std::span<const Complex> z_;
  EvalOptions opt_;
  std::unordered_map<const void*, Complex> memo_;
};

struct Dual {
  Complex v;
  ComplexVector d;
};

class DualEval {
 public:
  DualEval(std::span<const Complex> z, const EvalOptions& opt) : z_(z), opt_(opt) {}

  const Dual& operator()(const HoloExpr& e) {
    auto it = memo_.find(e.id());
    if (it != memo_.end()) return it->second;
    Dual v = compute(e.node());
    return memo_.emplace(e.id(), std::move(v)).first->second;
  }

 private:
  Dual compute(const Node& n) {
    const auto dim = static_cast<Eigen::Index>(z_.size());
    switch (n.kind) {
      case Kind::Const: return {n.value, ComplexVector::Zero(dim)};
      case Kind::Var: {
        if (n.index < 0 || n.index >= dim) throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
        return {z_[n.index], ComplexVector::Unit(dim, n.index)};
      }
      case Kind::Add: {
        Dual s{0.0, ComplexVector::Zero(dim)};
        for (const auto& a : n.args) {
          const Dual& x = (*this)(a);
          s.v += x.v;
          s.d += x.d;
        }
        return s;
      }
      case Kind::Mul: {
        Dual p{1.0, ComplexVector::Zero(dim)};
        for (const auto& a : n.args) {
          const Dual& x = (*this)(a);
          p.d = p.d * x.v + x.d * p.v;
          p.v *= x.v;
        }
        return p;
      }
      case Kind::Neg: {
        const Dual& x = (*this)(n.args[0]);
        return {-x.v, -x.d};
      }
      case Kind::Div: {
        const Dual a = (*this)(n.args[0]);
        const Dual& b = (*this)(n.args[1]);
        check_den(b.v, opt_);
        const Complex q = a.v / b.v;
        return {q, (a.d - b.d * q) / b.v};
      }
      case Kind::Sqrt: {
        const Dual& x = (*this)(n.args[0]);
        check_sqrt_arg(x.v, opt_, ErrorCode::NotDifferentiable);
        const Complex r = std::sqrt(x.v);
        return {r, x.d / (2.0 * r)};
      }
      case Kind::Pow: {
        const Dual& x = (*this)(n.args[0]);
        if (n.power == 0) return {1.0, ComplexVector::Zero(dim)};
        const Complex lower = int_pow(x.v, n.power - 1);
        return {lower * x.v, x.d * (static_cast<double>(n.power) * lower)};
      }
    }
    return {};
  }

  std::span<const Complex> z_;
  EvalOptions opt_;
  std::unordered_map<const void*, Dual> memo_;
};

std::shared_ptr<Node> make(Kind k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  return n;
}

}  // namespace

HoloExpr::HoloExpr() : HoloExpr(constant(ExactScalar(0))) {}

HoloExpr HoloExpr::constant(const ExactScalar& c) {
  auto n = make(Kind::Const);
  n->exact = c;
  n->value = c.to_complex();
  return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::constant(Complex c) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
    throw Error(ErrorCode::ParameterOutOfRange, "non-finite constant");
  auto n = make(Kind::Const);
  n->exact = ExactScalar::from_complex(c);
  n->value = c;
  return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::var(int index) {
  if (index < 0) throw Error(ErrorCode::DimensionMismatch, "negative variable index");
  auto n = make(Kind::Var);
  n->index = index;
  return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::add(std::vector<HoloExpr> terms) {
  std::vector<HoloExpr> kept;
  ExactScalar folded(0);
  bool any_const = false;
  for (auto& t : terms) {
    if (t.is_const()) {
      folded += t.node().exact;
      any_const = true;
    } else {
      kept.push_back(std::move(t));
    }
  }
  if (any_const && !folded.is_zero()) kept.push_back(constant(folded));
  if (kept.empty()) return constant(ExactScalar(0));
  if (kept.size() == 1) return kept.front();
  auto n = make(Kind::Add);
  n->args = std::move(kept);
  return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::mul(std::vector<HoloExpr> factors) {
  std::vector<HoloExpr> kept;
  ExactScalar folded(1);
  for (auto& f : factors) {
    if (f.is_const())
      folded *= f.node().exact;
    else
      kept.push_back(std::move(f));
  }
  if (folded.is_zero()) return constant(ExactScalar(0));
  if (folded != ExactScalar(1) || kept.empty()) kept.insert(kept.begin(), constant(folded));
  if (kept.size() == 1) return kept.front();
  auto n = make(Kind::Mul);
  n->args = std::move(kept);
  return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::neg(const HoloExpr& e) {
  if (e.is_const()) return constant(-e.node().exact);
  if (e.kind() == Kind::Neg) return e.node().args[0];
  auto n = make(Kind::Neg);
  n->args = {e};
  return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::div(const HoloExpr& num, const HoloExpr& den) {
  if (den.is_zero_const()) throw Error(ErrorCode::Pole, "division by the zero constant");
  if (den.is_const()) return mul({num, constant(den.node().exact.inverse())});
  auto n = make(Kind::Div);
  n->args = {num, den};
  return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::sqrt(const HoloExpr& e) {
  auto n = make(Kind::Sqrt);
  n->args = {e};
  return HoloExpr(std::move(n));
}

HoloExpr HoloExpr::pow(const HoloExpr& e, int k) {
  if (k < 0) throw Error(ErrorCode::ParameterOutOfRange, "negative power");
  if (k == 0) return constant(ExactScalar(1));
  if (k == 1) return e;
  auto n = make(Kind::Pow);
  n->args = {e};
  n->power = k;
  return HoloExpr(std::move(n));
}

int HoloExpr::max_var() const {
  if (kind() == Kind::Var) return node_->index;
  int best = -1;
  for (const auto& a : node_->args) best = std::max(best, a.max_var());
  return best;
}

bool HoloExpr::is_polynomial() const {
  if (kind() == Kind::Div || kind() == Kind::Sqrt) return false;
  for (const auto& a : node_->args)
    if (!a.is_polynomial()) return false;
  return true;
}

std::string HoloExpr::to_string() const {
  const Node& n = *node_;
  auto join = [&](const char* sep) {
    std::string s = "(";
    for (std::size_t i = 0; i < n.args.size(); ++i) {
      if (i) s += sep;
      s += n.args[i].to_string();
    }
    return s + ")";
  };
  switch (n.kind) {
    case Kind::Const: return n.exact.to_string();
    case Kind::Var: return "z" + std::to_string(n.index + 1);
    case Kind::Add: return join(" + ");
    case Kind::Mul: return join("*");
    case Kind::Neg: return "-" + n.args[0].to_string();
    case Kind::Div: return "(" + n.args[0].to_string() + ")/(" + n.args[1].to_string() + ")";
    case Kind::Sqrt: return "sqrt(" + n.args[0].to_string() + ")";
    case Kind::Pow: return n.args[0].to_string() + "^" + std::to_string(n.power);
  }
  return "?";
}

std::vector<Complex> evaluate(std::span<const HoloExpr> exprs, std::span<const Complex> z, const EvalOptions& opt) {
  ValueEval ev(z, opt);
  std::vector<Complex> out;
  out.reserve(exprs.size());
  for (const auto& e : exprs) out.push_back(ev(e));
  return out;
}

Complex evaluate(const HoloExpr& e, std::span<const Complex> z, const EvalOptions& opt) {
  return evaluate(std::span<const HoloExpr>(&e, 1), z, opt).front();
}

ValueAndGradient evaluate_with_gradient(std::span<const HoloExpr> exprs, std::span<const Complex> z,
                                        const EvalOptions& opt) {
  DualEval ev(z, opt);
  ValueAndGradient out;
  for (const auto& e : exprs) {
    const Dual& d = ev(e);
    out.values.push_back(d.v);
    out.grads.push_back(d.d);
  }
  return out;
}

std::vector<HoloExpr> substitute(std::span<const HoloExpr> exprs, std::span<const HoloExpr> values) {
  std::unordered_map<const void*, HoloExpr> memo;
  std::function<HoloExpr(const HoloExpr&)> rec = [&](const HoloExpr& e) -> HoloExpr {
    auto it = memo.find(e.id());
    if (it != memo.end()) return it->second;
    const Node& n = e.node();
    HoloExpr r;
    switch (n.kind) {
      case Kind::Const: r = e; break;
      case Kind::Var:
        if (static_cast<std::size_t>(n.index) >= values.size())
          throw Error(ErrorCode::DimensionMismatch, "substitution arity");
        r = values[n.index];
        break;
      case Kind::Add:
      case Kind::Mul: {
        std::vector<HoloExpr> args;
        for (const auto& a : n.args) args.push_back(rec(a));
        r = n.kind == Kind::Add ? HoloExpr::add(std::move(args)) : HoloExpr::mul(std::move(args));
        break;
      }
      case Kind::Neg: r = HoloExpr::neg(rec(n.args[0])); break;
      case Kind::Div: r = HoloExpr::div(rec(n.args[0]), rec(n.args[1])); break;
      case Kind::Sqrt: r = HoloExpr::sqrt(rec(n.args[0])); break;
      case Kind::Pow: r = HoloExpr::pow(rec(n.args[0]), n.power); break;
    }
    memo.emplace(e.id(), r);
    return r;
  };
  std::vector<HoloExpr> out;
  for (const auto& e : exprs) out.push_back(rec(e));
  return out;
}

namespace {

template <class S>
S const_value(const Node& n);
template <>
ExactScalar const_value<ExactScalar>(const Node& n) {
  return n.exact;
}
template <>
Complex const_value<Complex>(const Node& n) {
  return n.value;
}

}  // namespace

template <class S>
Series<S> expand_series(const HoloExpr& root, const std::vector<int>& weights, int order) {
  using Ser = Series<S>;
  std::unordered_map<const void*, Ser> memo;
  std::function<Ser(const HoloExpr&)> rec = [&](const HoloExpr& e) -> Ser {
    auto it = memo.find(e.id());
    if (it != memo.end()) return it->second;
    const Node& n = e.node();
    Ser r(weights, order);
    switch (n.kind) {
      case Kind::Const: r = Ser::constant(weights, order, const_value<S>(n)); break;
      case Kind::Var:
        if (static_cast<std::size_t>(n.index) >= weights.size())
          throw Error(ErrorCode::DimensionMismatch, "series variable index");
        r = Ser::variable(weights, order, n.index);
        break;
      case Kind::Add:
        for (const auto& a : n.args) r = r + rec(a);
        break;
      case Kind::Mul:
        r = Ser::constant(weights, order, S(1));
        for (const auto& a : n.args) r = r * rec(a);
        break;
      case Kind::Neg: r = -rec(n.args[0]); break;
      case Kind::Div: {
        if (order < 0) throw Error(ErrorCode::NotPolynomial, "division in a polynomial expansion");
        const Ser den = rec(n.args[1]);
        if (ScalarTraits<S>::is_zero(den.constant_term()))
          throw Error(ErrorCode::NotAnalyticAtOrigin, "denominator vanishes at the origin");
        r = rec(n.args[0]) * den.inverse();
        break;
      }
      case Kind::Sqrt:
        if (order < 0) throw Error(ErrorCode::NotPolynomial, "sqrt in a polynomial expansion");
        r = rec(n.args[0]).sqrt();
        break;
      case Kind::Pow: r = rec(n.args[0]).pow(n.power); break;
    }
    memo.emplace(e.id(), r);
    return r;
  };
  return rec(root);
}

template Series<ExactScalar> expand_series<ExactScalar>(const HoloExpr&, const std::vector<int>&, int);
template Series<Complex> expand_series<Complex>(const HoloExpr&, const std::vector<int>&, int);

ExactSeries expand_polynomial(const HoloExpr& e, int nvars) {
  if (!e.is_polynomial()) throw Error(ErrorCode::NotPolynomial, e.to_string());
  return expand_series<ExactScalar>(e, std::vector<int>(nvars, 1), -1);
}

}  // namespace lieball
