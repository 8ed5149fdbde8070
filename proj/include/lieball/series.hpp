#pragma once

// Sparse multivariate polynomials truncated at a weighted degree.
//
// The same engine backs three things: weighted jets in (z, w) with
// weight(z_i) = 1, weight(w) = 2 over exact scalars; restricted polynomials in
// (z, zbar, u); and ordinary Taylor polynomials over complex doubles.

#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lieball/error.hpp"
#include "lieball/exact.hpp"

namespace lieball {

using Monomial = std::vector<int>;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<std::complex<double>> {
  static bool is_zero(const std::complex<double>& v) { return v == std::complex<double>(0.0, 0.0); }
  static std::complex<double> sqrt(const std::complex<double>& v) {
    if (std::abs(v) == 0.0) throw Error(ErrorCode::NotAnalyticAtOrigin, "sqrt of a series vanishing at 0");
    return std::sqrt(v);
  }
  static std::complex<double> conj(const std::complex<double>& v) { return std::conj(v); }
};

template <>
struct ScalarTraits<ExactScalar> {
  static bool is_zero(const ExactScalar& v) { return v.is_zero(); }
  static ExactScalar sqrt(const ExactScalar& v) {
    if (v.is_zero()) throw Error(ErrorCode::NotAnalyticAtOrigin, "sqrt of a series vanishing at 0");
    auto r = v.try_sqrt();
    if (!r) throw Error(ErrorCode::InexactConstant, "no exact square root of " + v.to_string());
    return *r;
  }
  static ExactScalar conj(const ExactScalar& v) { return v.conj(); }
};

template <class S>
class Series {
 public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;

  Series() = default;
  /// `order` < 0 means no truncation.
  Series(std::vector<int> weights, int order) : weights_(std::move(weights)), order_(order) {}

  static Series constant(std::vector<int> weights, int order, const S& c) {
    Series s(std::move(weights), order);
    s.add_term(Monomial(s.nvars(), 0), c);
    return s;
  }
  static Series variable(std::vector<int> weights, int order, std::size_t index) {
    Series s(std::move(weights), order);
    Monomial m(s.nvars(), 0);
    m.at(index) = 1;
    s.add_term(std::move(m), S(1));
    return s;
  }

  std::size_t nvars() const { return weights_.size(); }
  const std::vector<int>& weights() const { return weights_; }
  int order() const { return order_; }
  const std::map<Monomial, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int weight_of(const Monomial& m) const {
    int w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * weights_[i];
    return w;
  }

  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S(0) : it->second;
  }
  S constant_term() const { return coefficient(Monomial(nvars(), 0)); }

  void add_term(const Monomial& m, const S& c) {
    if (order_ >= 0 && weight_of(m) > order_) return;
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Terms of weighted degree exactly `w`.
  Series homogeneous_part(int w) const {
    Series out(weights_, order_);
    for (const auto& [m, c] : terms_)
      if (weight_of(m) == w) out.terms_.emplace(m, c);
    return out;
  }

  /// Lowest weighted degree present; -1 for the zero series.
  int valuation() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
      const int w = weight_of(m);
      if (best < 0 || w < best) best = w;
    }
    return best;
  }

  int max_weight() const {
    int best = -1;
    for (const auto& [m, c] : terms_) best = std::max(best, weight_of(m));
    return best;
  }

  Series truncated(int order) const {
    Series out(weights_, order);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
  }

  Series conj_coefficients() const {
    Series out(weights_, order_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, Traits::conj(c));
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series out = a;
    out.order_ = combine_order(a.order_, b.order_);
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    if (out.order_ != a.order_) out = out.truncated(out.order_);
    return out;
  }
  friend Series operator-(const Series& a) {
    Series out(a.weights_, a.order_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(const Series& a, const Series& b) {
    Series out(a.weights_, combine_order(a.order_, b.order_));
    Monomial m(a.nvars());
    for (const auto& [ma, ca] : a.terms_) {
      const int wa = a.weight_of(ma);
      if (out.order_ >= 0 && wa > out.order_) continue;
      for (const auto& [mb, cb] : b.terms_) {
        if (out.order_ >= 0 && wa + b.weight_of(mb) > out.order_) continue;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }
  friend Series operator*(const S& s, const Series& a) {
    Series out(a.weights_, a.order_);
    for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
    return out;
  }

  Series pow(int k) const {
    if (k < 0) throw Error(ErrorCode::ParameterOutOfRange, "negative series power");
    Series result = constant(weights_, order_, S(1));
    Series base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// Multiplicative inverse by Newton iteration y <- y (2 - a y).
  Series inverse() const {
    require_truncated();
    const S a0 = constant_term();
    if (Traits::is_zero(a0)) throw Error(ErrorCode::NotAnalyticAtOrigin, "inverse of a series vanishing at 0");
    Series y = constant(weights_, order_, S(1) / a0);
    const Series two = constant(weights_, order_, S(2));
    for (int acc = 1; acc <= order_; acc *= 2) y = y * (two - (*this) * y);
    return y;
  }

  /// Principal square root by Newton iteration y <- (y + a / y) / 2.
  Series sqrt() const {
    require_truncated();
    const S a0 = constant_term();
    Series y = constant(weights_, order_, Traits::sqrt(a0));
    const S half = S(1) / S(2);
    for (int acc = 1; acc <= order_; acc *= 2) y = half * (y + (*this) * y.inverse());
    return y;
  }

  /// Substitutes series `values[i]` for variable i; all values must share weights/order.
  Series compose(std::span<const Series> values) const {
    if (values.size() != nvars()) throw Error(ErrorCode::DimensionMismatch, "compose arity");
    const Series& proto = values.front();
    Series out(proto.weights_, proto.order_);
    std::vector<std::vector<Series>> powers(nvars());
    for (const auto& [m, c] : terms_) {
      Series term = constant(proto.weights_, proto.order_, c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(proto.weights_, proto.order_, S(1)));
        while (static_cast<int>(cache.size()) <= m[i]) cache.push_back(cache.back() * values[i]);
        term = term * cache[m[i]];
      }
      out = out + term;
    }
    return out;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using T = decltype(f(std::declval<S>()));
    Series<T> out(weights_, order_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

 private:
  static int combine_order(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
  }
  void require_truncated() const {
    if (order_ < 0) throw Error(ErrorCode::ParameterOutOfRange, "inverse/sqrt need a truncation order");
  }

  std::vector<int> weights_;
  int order_ = -1;
  std::map<Monomial, S> terms_;
};

using ExactSeries = Series<ExactScalar>;
using ComplexSeries = Series<std::complex<double>>;

}  // namespace lieball
