#pragma once

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lieball/exact.hpp"
#include "lieball/linalg.hpp"
#include "lieball/series.hpp"

namespace lieball {

/// Immutable holomorphic expression. Nodes are shared, so a tree may be a DAG;
/// evaluation memoizes per node within one call.
class HoloExpr {
 public:
  enum class Kind { Const, Var, Add, Mul, Neg, Div, Sqrt, Pow };

  struct Node {
    Kind kind = Kind::Const;
    ExactScalar exact;   // Const
    Complex value;       // Const, floating image of `exact`
    int index = 0;       // Var
    int power = 0;       // Pow
    std::vector<HoloExpr> args;
  };

  HoloExpr();  // the constant 0

  static HoloExpr constant(const ExactScalar& c);
  /// Rationalizes the double parts exactly.
  static HoloExpr constant(Complex c);
  static HoloExpr constant(double c) { return constant(Complex(c, 0.0)); }
  static HoloExpr var(int index);
  static HoloExpr add(std::vector<HoloExpr> terms);
  static HoloExpr mul(std::vector<HoloExpr> factors);
  static HoloExpr neg(const HoloExpr& e);
  static HoloExpr div(const HoloExpr& num, const HoloExpr& den);
  static HoloExpr sqrt(const HoloExpr& e);
  static HoloExpr pow(const HoloExpr& e, int k);

  Kind kind() const { return node_->kind; }
  const Node& node() const { return *node_; }
  const void* id() const { return node_.get(); }

  bool is_const() const { return kind() == Kind::Const; }
  bool is_zero_const() const { return is_const() && node_->exact.is_zero(); }
  /// Largest variable index used, -1 if none.
  int max_var() const;
  /// No Div or Sqrt nodes.
  bool is_polynomial() const;
  std::string to_string() const;

  friend HoloExpr operator+(const HoloExpr& a, const HoloExpr& b) { return add({a, b}); }
  friend HoloExpr operator-(const HoloExpr& a, const HoloExpr& b) { return add({a, neg(b)}); }
  friend HoloExpr operator-(const HoloExpr& a) { return neg(a); }
  friend HoloExpr operator*(const HoloExpr& a, const HoloExpr& b) { return mul({a, b}); }
  friend HoloExpr operator/(const HoloExpr& a, const HoloExpr& b) { return div(a, b); }

 private:
  explicit HoloExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Tolerances for singular evaluation.
struct EvalOptions {
  double pole_tol = 1e-12;
  double branch_tol = 1e-12;
};

/// Evaluates all expressions at z with a shared memo. Errors: Pole, BranchPoint,
/// BranchCut (Sqrt argument within branch_tol of the negative real axis),
/// DimensionMismatch.
std::vector<Complex> evaluate(std::span<const HoloExpr> exprs, std::span<const Complex> z,
                              const EvalOptions& opt = {});
Complex evaluate(const HoloExpr& e, std::span<const Complex> z, const EvalOptions& opt = {});

/// Values plus holomorphic gradients by forward-mode dual numbers.
/// grads[a](j) = d expr_a / d z_j. A Sqrt argument on the cut raises NotDifferentiable.
struct ValueAndGradient {
  std::vector<Complex> values;
  std::vector<ComplexVector> grads;
};
ValueAndGradient evaluate_with_gradient(std::span<const HoloExpr> exprs, std::span<const Complex> z,
                                        const EvalOptions& opt = {});

/// Replaces Var(i) by values[i].
std::vector<HoloExpr> substitute(std::span<const HoloExpr> exprs, std::span<const HoloExpr> values);

/// Truncated Taylor expansion at the origin. Const nodes contribute their exact
/// value (ExactSeries) or floating value (ComplexSeries). Div needs a nonzero
/// constant term in the denominator; Sqrt needs a nonzero constant term.
/// Errors: NotAnalyticAtOrigin, InexactConstant (exact sqrt unavailable).
template <class S>
Series<S> expand_series(const HoloExpr& e, const std::vector<int>& weights, int order);

/// Exact polynomial (untruncated). Errors: NotPolynomial.
ExactSeries expand_polynomial(const HoloExpr& e, int nvars);

}  // namespace lieball
