#include "qabel/series.hpp"

#include <cmath>

namespace qabel {

ExactSeries to_exact(const FloatSeries& s) {
  ExactSeries out(s.order());
  for (int i = 0; i <= s.order(); ++i) out.coeff(i) = Rational(s[i]);
  return out;
}

FloatSeries to_float(const ExactSeries& s) {
  FloatSeries out(s.order());
  for (int i = 0; i <= s.order(); ++i) out.coeff(i) = rational_to_double(s[i]);
  return out;
}

double max_abs_coeff(const FloatSeries& s) {
  double m = 0.0;
  for (int i = 0; i <= s.order(); ++i) m = std::max(m, std::abs(s[i]));
  return m;
}

namespace {

double tail_heuristic(double last_abs, double qabs, int order) {
  return last_abs * std::pow(qabs, order + 1) / (1.0 - qabs);
}

}  // namespace

EvalResult eval_at(const FloatSeries& s, std::complex<double> q) {
  const double qabs = std::abs(q);
  if (qabs >= 1.0) throw std::invalid_argument("evaluation point must satisfy |q| < 1");
  std::complex<double> acc(0.0, 0.0);
  for (int i = s.order(); i >= 0; --i) acc = acc * q + s[i];
  return {acc, tail_heuristic(std::abs(s[s.order()]), qabs, s.order())};
}

EvalResult eval_at(const ExactSeries& s, std::complex<double> q) {
  return eval_at(to_float(s), q);
}

Rational eval_exact(const ExactSeries& s, const Rational& q) {
  Rational acc(0);
  for (int i = s.order(); i >= 0; --i) acc = acc * q + s[i];
  return acc;
}

}  // namespace qabel
