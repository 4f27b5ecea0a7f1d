#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qabel/arith_function.hpp"
#include "qabel/series.hpp"

namespace qabel {

// The q-series families the engine can build. "partition" forms are brute
// enumerations over partitions, "closed" forms are the matching n-indexed
// sums, "double" forms are the (n,k) double sums; lambert_num/lambert_den are
// the Lambert-series pair.
enum class FormId {
  frobenius,
  thm1_partition,
  thm1_closed,
  cor1_partition,
  cor1_closed,
  cor1_5_double,
  thm2_partition,
  thm2_closed,
  cor2_partition,
  cor2_5_single,
  cor2_5_double,
  lambert_num,
  lambert_den,
};

const char* form_name(FormId id);
FormId parse_form(const std::string& name);  // throws with the valid-name list
std::vector<FormId> all_forms();
bool is_partition_form(FormId id);

// Partition-enumeration builders refuse orders above this.
inline constexpr int kEnumerationGuard = 60;

// Exact builder: each form follows its own literal route (enumeration,
// per-n Pochhammer products, or double-sum truncation with exact index
// bounds), so that cross-form identity checks compare independent
// computations. Throws std::domain_error past the enumeration guard and
// std::out_of_range on insufficient tabulation.
ExactSeries build_exact(FormId id, const ArithmeticFunction& f, int order);

// Float builder: same formal series, computed through numerically stable
// recurrences (the coefficientwise-equal product forms). Intermediate
// magnitudes are probed in double first; if they exceed the integer-exact
// double range the series is rebuilt with GMP floats at a precision derived
// from the probe, then rounded back to double (the final coefficients are
// small). min_precision_bits forces at least that rebuild precision.
FloatSeries build_float(FormId id, const ArithmeticFunction& f, int order,
                        int min_precision_bits = 0);

// Plain power series sum f(n) q^n (the Abel-summand reference form).
ExactSeries qasymp_reference(const ArithmeticFunction& f, int order);

// Lambert series sum_{n>=1} f(n) q^n / (1 - q^n); coefficient of q^m is the
// divisor sum over d | m of f(d).
ExactSeries lambert_series(const ArithmeticFunction& f, int order);
FloatSeries lambert_series_float(const ArithmeticFunction& f, int order);

// Terms t_n of a form's n-indexed sum at a fixed point, for the continued
// fraction transform. Only forms whose terms are finite products are
// supported: frobenius, thm1_closed, cor2_5_single, lambert_num, lambert_den.
std::vector<Rational> cf_terms_exact(FormId id, const ArithmeticFunction& f, int depth,
                                     const Rational& q);
std::vector<std::complex<double>> cf_terms_float(FormId id, const ArithmeticFunction& f, int depth,
                                                 std::complex<double> q);

}  // namespace qabel
