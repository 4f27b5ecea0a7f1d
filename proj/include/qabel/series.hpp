#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qabel/rational.hpp"

namespace qabel {

// Formal power series in q truncated at q^order (inclusive). Coefficient type
// C is Rational for the exact backend or double for the float backend; all
// operations are coefficientwise-exact modulo q^(order+1) over C. Values are
// immutable once published; the mutating helpers exist for builders that own
// their scratch series. Mixed-order operands truncate to the smaller order.
template <typename C>
class Series {
 public:
  explicit Series(int order) : c_(static_cast<std::size_t>(order) + 1, C(0)) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
  }

  static Series constant(const C& value, int order) {
    Series s(order);
    s.c_[0] = value;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  C& coeff(int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<C>& coeffs() const { return c_; }

  Series truncated(int new_order) const {
    if (new_order >= order()) return *this;
    Series out(new_order);
    std::copy(c_.begin(), c_.begin() + new_order + 1, out.c_.begin());
    return out;
  }

  // In-place multiply by (1 - q^k).
  void mul_one_minus_power(int k) {
    if (k <= 0) throw std::invalid_argument("power must be >= 1");
    for (int m = order(); m >= k; --m) c_[m] -= c_[m - k];
  }

  // In-place divide by (1 - q^k), i.e. multiply by 1 + q^k + q^{2k} + ...
  void div_one_minus_power(int k) {
    if (k <= 0) throw std::invalid_argument("power must be >= 1");
    for (int m = k; m <= order(); ++m) c_[m] += c_[m - k];
  }

  // In-place: this += scalar * q^shift * other.
  void add_scaled_shifted(const Series& other, const C& scalar, int shift) {
    const int top = std::min(order(), shift <= order() ? order() - shift : -1);
    for (int m = 0; m <= std::min(other.order(), top); ++m)
      c_[m + shift] += scalar * other.c_[m];
  }

 private:
  std::vector<C> c_;
};

using ExactSeries = Series<Rational>;
using FloatSeries = Series<double>;

template <typename C>
Series<C> add(const Series<C>& a, const Series<C>& b) {
  const int n = std::min(a.order(), b.order());
  Series<C> out(n);
  for (int i = 0; i <= n; ++i) out.coeff(i) = a[i] + b[i];
  return out;
}

template <typename C>
Series<C> sub(const Series<C>& a, const Series<C>& b) {
  const int n = std::min(a.order(), b.order());
  Series<C> out(n);
  for (int i = 0; i <= n; ++i) out.coeff(i) = a[i] - b[i];
  return out;
}

// Cauchy product, truncated to the smaller operand order.
template <typename C>
Series<C> mul(const Series<C>& a, const Series<C>& b) {
  const int n = std::min(a.order(), b.order());
  Series<C> out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == C(0)) continue;
    for (int j = 0; i + j <= n; ++j) out.coeff(i + j) += a[i] * b[j];
  }
  return out;
}

template <typename C>
Series<C> scale(const Series<C>& a, const C& factor) {
  Series<C> out(a.order());
  for (int i = 0; i <= a.order(); ++i) out.coeff(i) = a[i] * factor;
  return out;
}

// q^k * S, coefficients past the order dropped.
template <typename C>
Series<C> shifted(const Series<C>& a, int k) {
  if (k < 0) throw std::invalid_argument("shift must be >= 0");
  Series<C> out(a.order());
  for (int i = 0; i + k <= a.order(); ++i) out.coeff(i + k) = a[i];
  return out;
}

// Multiplicative inverse mod q^(order+1); requires a nonzero constant term.
template <typename C>
Series<C> inverse(const Series<C>& a) {
  if (a[0] == C(0)) throw std::invalid_argument("cannot invert a series with zero constant term");
  const int n = a.order();
  Series<C> out(n);
  out.coeff(0) = C(1) / a[0];
  for (int m = 1; m <= n; ++m) {
    C acc(0);
    for (int j = 1; j <= m; ++j) acc += a[j] * out[m - j];
    out.coeff(m) = -acc / a[0];
  }
  return out;
}

// q -> q^k substitution; the order is preserved, so coefficients of q^(km)
// with km > order are dropped.
template <typename C>
Series<C> substitute_power(const Series<C>& a, int k) {
  if (k <= 0) throw std::invalid_argument("substitution power must be >= 1");
  Series<C> out(a.order());
  for (int m = 0; static_cast<long long>(m) * k <= a.order(); ++m) out.coeff(m * k) = a[m];
  return out;
}

// (q;q)_n = prod_{k=1..n} (1 - q^k), truncated.
template <typename C>
Series<C> poch_q(int n, int order) {
  if (n < 0) throw std::invalid_argument("poch_q requires n >= 0");
  Series<C> out = Series<C>::constant(C(1), order);
  for (int k = 1; k <= n && k <= order; ++k) out.mul_one_minus_power(k);
  return out;
}

// (q^a;q)_inf = prod_{k>=a} (1 - q^k), truncated; factors beyond the order are
// congruent to 1. Requires a >= 1.
template <typename C>
Series<C> poch_inf(int a, int order) {
  if (a < 1) throw std::invalid_argument("poch_inf requires a >= 1");
  Series<C> out = Series<C>::constant(C(1), order);
  for (int k = a; k <= order; ++k) out.mul_one_minus_power(k);
  return out;
}

ExactSeries to_exact(const FloatSeries& s);
FloatSeries to_float(const ExactSeries& s);

// Largest |coefficient| of a float series.
double max_abs_coeff(const FloatSeries& s);

struct EvalResult {
  std::complex<double> value;
  double tail;  // |c_N| |q|^{N+1} / (1-|q|), a truncation-error heuristic
};

// Horner evaluation of the truncation at a point inside the unit disk.
EvalResult eval_at(const FloatSeries& s, std::complex<double> q);
EvalResult eval_at(const ExactSeries& s, std::complex<double> q);

// Exact evaluation at a rational point (no tail estimate).
Rational eval_exact(const ExactSeries& s, const Rational& q);

}  // namespace qabel
