#include "qabel/forms.hpp"

#include <cmath>
#include <stdexcept>

#include "qabel/partition.hpp"

namespace qabel {

namespace {

struct FormEntry {
  FormId id;
  const char* name;
};

constexpr FormEntry kForms[] = {
    {FormId::frobenius, "frobenius"},
    {FormId::thm1_partition, "thm1_partition"},
    {FormId::thm1_closed, "thm1_closed"},
    {FormId::cor1_partition, "cor1_partition"},
    {FormId::cor1_closed, "cor1_closed"},
    {FormId::cor1_5_double, "cor1_5_double"},
    {FormId::thm2_partition, "thm2_partition"},
    {FormId::thm2_closed, "thm2_closed"},
    {FormId::cor2_partition, "cor2_partition"},
    {FormId::cor2_5_single, "cor2_5_single"},
    {FormId::cor2_5_double, "cor2_5_double"},
    {FormId::lambert_num, "lambert_num"},
    {FormId::lambert_den, "lambert_den"},
};

void require_coverage(const ArithmeticFunction& f, int order) {
  if (order >= 1 && !f.covers(static_cast<unsigned>(order)))
    f.value(static_cast<unsigned>(order));  // throws with the table bound
}

void require_guard(FormId id, int order) {
  if (order > kEnumerationGuard)
    throw std::domain_error(std::string(form_name(id)) + ": order " + std::to_string(order) +
                            " exceeds the partition-enumeration guard (" +
                            std::to_string(kEnumerationGuard) + ")");
}

}  // namespace

const char* form_name(FormId id) {
  for (const auto& e : kForms)
    if (e.id == id) return e.name;
  return "?";
}

FormId parse_form(const std::string& name) {
  for (const auto& e : kForms)
    if (name == e.name) return e.id;
  std::string known;
  for (const auto& e : kForms) known += std::string(known.empty() ? "" : ", ") + e.name;
  throw std::invalid_argument("unknown form '" + name + "'; valid forms: " + known);
}

std::vector<FormId> all_forms() {
  std::vector<FormId> out;
  for (const auto& e : kForms) out.push_back(e.id);
  return out;
}

bool is_partition_form(FormId id) {
  return id == FormId::thm1_partition || id == FormId::cor1_partition ||
         id == FormId::thm2_partition || id == FormId::cor2_partition;
}

ExactSeries qasymp_reference(const ArithmeticFunction& f, int order) {
  require_coverage(f, order);
  ExactSeries s(order);
  for (int n = 1; n <= order; ++n) s.coeff(n) = f.value(static_cast<unsigned>(n));
  return s;
}

ExactSeries lambert_series(const ArithmeticFunction& f, int order) {
  require_coverage(f, order);
  ExactSeries s(order);
  for (int n = 1; n <= order; ++n) {
    const Rational fn = f.value(static_cast<unsigned>(n));
    if (fn == 0) continue;
    for (int e = n; e <= order; e += n) s.coeff(e) += fn;
  }
  return s;
}

FloatSeries lambert_series_float(const ArithmeticFunction& f, int order) {
  require_coverage(f, order);
  FloatSeries s(order);
  for (int n = 1; n <= order; ++n) {
    const double fn = f.value_d(static_cast<unsigned>(n));
    if (fn == 0.0) continue;
    for (int e = n; e <= order; e += n) s.coeff(e) += fn;
  }
  return s;
}

namespace {

// sum over all partitions of weight(lambda) q^|lambda|, sizes 0..order.
template <typename Weight>
ExactSeries partition_sum(int order, unsigned min_part, bool distinct, Weight&& w) {
  ExactSeries s(order);
  for (unsigned m = 0; m <= static_cast<unsigned>(order); ++m) {
    Rational acc(0);
    for_each_partition(m, min_part, distinct,
                       [&](const std::vector<unsigned>& parts) { acc += w(parts); });
    s.coeff(static_cast<int>(m)) = acc;
  }
  return s;
}

ExactSeries build_frobenius(const ArithmeticFunction& f, int order) {
  ExactSeries s = qasymp_reference(f, order);
  s.mul_one_minus_power(1);
  return s;
}

// (q;q)_inf * sum_lambda f(lg lambda) q^|lambda|; lg(empty) = 0 and f(0) = 0.
ExactSeries build_thm1_partition(const ArithmeticFunction& f, int order) {
  ExactSeries inner = partition_sum(order, 1, false, [&](const std::vector<unsigned>& parts) {
    return parts.empty() ? Rational(0) : f.value(parts.front());
  });
  return mul(poch_inf<Rational>(1, order), inner);
}

// (q;q)_inf * sum_n f(n) q^n / (q;q)_n, with the inverse Pochhammer kept as a
// running series divided by (1 - q^n) at each step.
ExactSeries build_thm1_closed(const ArithmeticFunction& f, int order) {
  ExactSeries inv_poch = ExactSeries::constant(Rational(1), order);
  ExactSeries acc(order);
  for (int n = 1; n <= order; ++n) {
    inv_poch.div_one_minus_power(n);
    acc.add_scaled_shifted(inv_poch, f.value(static_cast<unsigned>(n)), n);
  }
  return mul(poch_inf<Rational>(1, order), acc);
}

// -sum_lambda mu_p(lambda) f(sm lambda) q^|lambda| over distinct-part lambda.
ExactSeries build_cor1_partition(const ArithmeticFunction& f, int order) {
  return partition_sum(order, 1, true, [&](const std::vector<unsigned>& parts) {
    if (parts.empty()) return Rational(0);
    const Rational v = f.value(parts.back());
    return (parts.size() % 2 == 0) ? -v : v;  // -mu_p = -(-1)^length
  });
}

// sum_n f(n) q^n (q^{n+1};q)_inf, each factor built independently.
ExactSeries build_cor1_closed(const ArithmeticFunction& f, int order) {
  ExactSeries acc(order);
  for (int n = 1; n <= order; ++n) {
    const Rational fn = f.value(static_cast<unsigned>(n));
    if (fn == 0) continue;
    if (n + 1 > order) {
      acc.coeff(n) += fn;  // (q^{n+1};q)_inf == 1 mod q^{order+1}
      continue;
    }
    acc.add_scaled_shifted(poch_inf<Rational>(n + 1, order), fn, n);
  }
  return acc;
}

// -sum_{n,k>=1} (-1)^k f(n) q^{nk + k(k-1)/2} / (q;q)_{k-1}; index ranges cut
// exactly where the minimal exponent passes the order.
ExactSeries build_cor1_5_double(const ArithmeticFunction& f, int order) {
  ExactSeries acc(order);
  ExactSeries inv_poch = ExactSeries::constant(Rational(1), order);  // 1/(q;q)_{k-1}
  for (int k = 1; k * (k - 1) / 2 + k <= order; ++k) {
    if (k >= 2) inv_poch.div_one_minus_power(k - 1);
    const int base = k * (k - 1) / 2;
    const int sign = (k % 2 == 0) ? 1 : -1;
    for (int n = 1; n * k + base <= order; ++n) {
      const Rational fn = f.value(static_cast<unsigned>(n));
      if (fn == 0) continue;
      acc.add_scaled_shifted(inv_poch, Rational(-sign) * fn, n * k + base);
    }
  }
  return acc;
}

// (q;q)_inf * sum_lambda f(sm lambda) q^|lambda|.
ExactSeries build_thm2_partition(const ArithmeticFunction& f, int order) {
  ExactSeries inner = partition_sum(order, 1, false, [&](const std::vector<unsigned>& parts) {
    return parts.empty() ? Rational(0) : f.value(parts.back());
  });
  return mul(poch_inf<Rational>(1, order), inner);
}

// (q;q)_inf * sum_n f(n) q^n / (q^n;q)_inf, with a full series inversion per n.
ExactSeries build_thm2_closed(const ArithmeticFunction& f, int order) {
  ExactSeries acc(order);
  for (int n = 1; n <= order; ++n) {
    const Rational fn = f.value(static_cast<unsigned>(n));
    if (fn == 0) continue;
    acc.add_scaled_shifted(inverse(poch_inf<Rational>(n, order)), fn, n);
  }
  return mul(poch_inf<Rational>(1, order), acc);
}

// -sum_lambda mu_p(lambda) f(lg lambda) q^|lambda| over distinct-part lambda.
ExactSeries build_cor2_partition(const ArithmeticFunction& f, int order) {
  return partition_sum(order, 1, true, [&](const std::vector<unsigned>& parts) {
    if (parts.empty()) return Rational(0);
    const Rational v = f.value(parts.front());
    return (parts.size() % 2 == 0) ? -v : v;
  });
}

// sum_n f(n) q^n (q;q)_{n-1}, each partial product built independently.
ExactSeries build_cor2_5_single(const ArithmeticFunction& f, int order) {
  ExactSeries acc(order);
  for (int n = 1; n <= order; ++n) {
    const Rational fn = f.value(static_cast<unsigned>(n));
    if (fn == 0) continue;
    acc.add_scaled_shifted(poch_q<Rational>(n - 1, order), fn, n);
  }
  return acc;
}

// (q;q)_inf * sum_{n,k>=1} f(n) q^{nk} / (q;q)_{k-1}. The pentagonal prefactor
// normalizes the double sum onto the single-sum form: by the q-binomial
// theorem the inner k-sum is q^n/(q^n;q)_inf, so without the prefactor the
// double sum equals the smallest-part sum over all partitions, not the
// bracketed one.
ExactSeries build_cor2_5_double(const ArithmeticFunction& f, int order) {
  ExactSeries acc(order);
  ExactSeries inv_poch = ExactSeries::constant(Rational(1), order);
  for (int k = 1; k <= order; ++k) {
    if (k >= 2) inv_poch.div_one_minus_power(k - 1);
    for (int n = 1; n * k <= order; ++n) {
      const Rational fn = f.value(static_cast<unsigned>(n));
      if (fn == 0) continue;
      acc.add_scaled_shifted(inv_poch, fn, n * k);
    }
  }
  return mul(poch_inf<Rational>(1, order), acc);
}

ArithmeticFunction the_one() { return builtin_function("one"); }

}  // namespace

ExactSeries build_exact(FormId id, const ArithmeticFunction& f, int order) {
  if (is_partition_form(id)) require_guard(id, order);
  require_coverage(f, order);
  switch (id) {
    case FormId::frobenius: return build_frobenius(f, order);
    case FormId::thm1_partition: return build_thm1_partition(f, order);
    case FormId::thm1_closed: return build_thm1_closed(f, order);
    case FormId::cor1_partition: return build_cor1_partition(f, order);
    case FormId::cor1_closed: return build_cor1_closed(f, order);
    case FormId::cor1_5_double: return build_cor1_5_double(f, order);
    case FormId::thm2_partition: return build_thm2_partition(f, order);
    case FormId::thm2_closed: return build_thm2_closed(f, order);
    case FormId::cor2_partition: return build_cor2_partition(f, order);
    case FormId::cor2_5_single: return build_cor2_5_single(f, order);
    case FormId::cor2_5_double: return build_cor2_5_double(f, order);
    case FormId::lambert_num: return lambert_series(f, order);
    case FormId::lambert_den: return lambert_series(the_one(), order);
  }
  throw std::logic_error("unreachable");
}

namespace {

// Stable construction of the largest-part chain series
//   sum_n f(n) q^n (q^{n+1};q)_inf
// (coefficientwise equal to thm1_closed, cor1_closed and cor1_5_double),
// with (q^{n+1};q)_inf maintained by dividing out one factor per step.
// Tracks the largest intermediate magnitude so the caller can judge whether
// the coefficient arithmetic stayed integer-exact.
template <typename C>
Series<C> chain_eq5_impl(const ArithmeticFunction& f, int order, double* max_mag) {
  Series<C> d = poch_inf<C>(1, order);
  Series<C> acc(order);
  for (int n = 1; n <= order; ++n) {
    d.div_one_minus_power(n);  // now (q^{n+1};q)_inf
    acc.add_scaled_shifted(d, C(f.value(static_cast<unsigned>(n))), n);
    if (max_mag) {
      for (int j = 0; j <= order - n; ++j) {
        const double a = std::abs(static_cast<double>(d[j]));
        if (a > *max_mag) *max_mag = a;
      }
    }
  }
  if (max_mag)
    for (int j = 0; j <= order; ++j)
      *max_mag = std::max(*max_mag, std::abs(static_cast<double>(acc[j])));
  return acc;
}

// Stable construction of the smallest-part chain series
//   sum_n f(n) q^n (q;q)_{n-1}
// (coefficientwise equal to thm2_closed, cor2_5_single and cor2_5_double),
// with the partial product extended by one factor per step.
template <typename C>
Series<C> chain_eq8_impl(const ArithmeticFunction& f, int order, double* max_mag) {
  Series<C> e = Series<C>::constant(C(1), order);  // (q;q)_{n-1}
  Series<C> acc(order);
  for (int n = 1; n <= order; ++n) {
    acc.add_scaled_shifted(e, C(f.value(static_cast<unsigned>(n))), n);
    if (max_mag) {
      for (int j = 0; j <= order - n; ++j) {
        const double a = std::abs(static_cast<double>(e[j]));
        if (a > *max_mag) *max_mag = a;
      }
    }
    e.mul_one_minus_power(n);
  }
  if (max_mag)
    for (int j = 0; j <= order; ++j)
      *max_mag = std::max(*max_mag, std::abs(static_cast<double>(acc[j])));
  return acc;
}

FloatSeries round_to_double(const Series<mpf_class>& s) {
  FloatSeries out(s.order());
  for (int i = 0; i <= s.order(); ++i) out.coeff(i) = s[i].get_d();
  return out;
}

// Probe in double; if intermediates left the integer-exact double range,
// rebuild with GMP floats wide enough to keep absolute errors negligible.
template <typename Builder>
FloatSeries probe_and_build(Builder&& run, int order, int min_precision_bits) {
  double max_mag = 0.0;
  FloatSeries probe = run.template operator()<double>(&max_mag);
  int needed_bits = 0;
  if (!std::isfinite(max_mag))
    needed_bits = 1600;
  else if (max_mag >= std::ldexp(1.0, 50))
    needed_bits = static_cast<int>(std::ceil(std::log2(max_mag))) + 64 +
                  static_cast<int>(std::ceil(std::log2(order + 1.0)));
  needed_bits = std::max(needed_bits, min_precision_bits);
  if (needed_bits <= 53) return probe;
  mpf_set_default_prec(static_cast<mp_bitcnt_t>(needed_bits));
  return round_to_double(run.template operator()<mpf_class>(nullptr));
}

struct ChainEq5Builder {
  const ArithmeticFunction& f;
  int order;
  template <typename C>
  Series<C> operator()(double* max_mag) const {
    return chain_eq5_impl<C>(f, order, max_mag);
  }
};

struct ChainEq8Builder {
  const ArithmeticFunction& f;
  int order;
  template <typename C>
  Series<C> operator()(double* max_mag) const {
    return chain_eq8_impl<C>(f, order, max_mag);
  }
};

}  // namespace

FloatSeries build_float(FormId id, const ArithmeticFunction& f, int order,
                        int min_precision_bits) {
  require_coverage(f, order);
  switch (id) {
    case FormId::frobenius: {
      FloatSeries s(order);
      for (int n = 1; n <= order; ++n) s.coeff(n) = f.value_d(static_cast<unsigned>(n));
      s.mul_one_minus_power(1);
      return s;
    }
    case FormId::lambert_num: return lambert_series_float(f, order);
    case FormId::lambert_den: return lambert_series_float(the_one(), order);
    case FormId::thm1_closed:
    case FormId::cor1_closed:
    case FormId::cor1_5_double:
      return probe_and_build(ChainEq5Builder{f, order}, order, min_precision_bits);
    case FormId::thm2_closed:
    case FormId::cor2_5_single:
    case FormId::cor2_5_double:
      return probe_and_build(ChainEq8Builder{f, order}, order, min_precision_bits);
    case FormId::thm1_partition:
    case FormId::cor1_partition:
    case FormId::thm2_partition:
    case FormId::cor2_partition:
      require_guard(id, order);
      return to_float(build_exact(id, f, order));
  }
  throw std::logic_error("unreachable");
}

namespace {

template <typename V>
V value_of(const Rational& r);
template <>
Rational value_of<Rational>(const Rational& r) {
  return r;
}
template <>
std::complex<double> value_of<std::complex<double>>(const Rational& r) {
  return {rational_to_double(r), 0.0};
}

template <typename V>
std::vector<V> cf_terms(FormId id, const ArithmeticFunction& f, int depth, const V& q) {
  if (depth < 1) throw std::invalid_argument("cf depth must be >= 1");
  require_coverage(f, depth);
  std::vector<V> terms;
  terms.reserve(static_cast<std::size_t>(depth));
  V qn(1);       // q^n
  V poch(1);     // running (q;q)_m
  V qpow(1);     // running q^m inside the product updates
  switch (id) {
    case FormId::frobenius:
      for (int n = 1; n <= depth; ++n) {
        qn = qn * q;
        terms.push_back((V(1) - q) * value_of<V>(f.value(static_cast<unsigned>(n))) * qn);
      }
      return terms;
    case FormId::thm1_closed:
      for (int n = 1; n <= depth; ++n) {
        qn = qn * q;
        qpow = qpow * q;
        poch = poch * (V(1) - qpow);  // (q;q)_n
        terms.push_back(value_of<V>(f.value(static_cast<unsigned>(n))) * qn / poch);
      }
      return terms;
    case FormId::cor2_5_single:
      for (int n = 1; n <= depth; ++n) {
        qn = qn * q;
        terms.push_back(value_of<V>(f.value(static_cast<unsigned>(n))) * qn * poch);
        qpow = qpow * q;
        poch = poch * (V(1) - qpow);  // (q;q)_n, used by the next term
      }
      return terms;
    case FormId::lambert_num:
    case FormId::lambert_den:
      for (int n = 1; n <= depth; ++n) {
        qn = qn * q;
        const Rational fn =
            id == FormId::lambert_num ? f.value(static_cast<unsigned>(n)) : Rational(1);
        terms.push_back(value_of<V>(fn) * qn / (V(1) - qn));
      }
      return terms;
    default:
      throw std::invalid_argument(
          std::string("form '") + form_name(id) +
          "' has no finite closed term sequence for the continued-fraction transform; "
          "supported: frobenius, thm1_closed, cor2_5_single, lambert_num, lambert_den");
  }
}

}  // namespace

std::vector<Rational> cf_terms_exact(FormId id, const ArithmeticFunction& f, int depth,
                                     const Rational& q) {
  return cf_terms<Rational>(id, f, depth, q);
}

std::vector<std::complex<double>> cf_terms_float(FormId id, const ArithmeticFunction& f, int depth,
                                                 std::complex<double> q) {
  return cf_terms<std::complex<double>>(id, f, depth, q);
}

}  // namespace qabel
