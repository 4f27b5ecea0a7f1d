#pragma once

#include <gmpxx.h>

#include <string>

namespace qabel {

// Exact rational coefficients; canonical form is maintained by GMP after
// explicit canonicalize() calls in the parsing helpers below.
using Rational = mpq_class;

// Parses "p/q", a plain integer, or a decimal like "-3.25" into an exact
// rational. Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Canonical textual form: "n" for integers, "p/q" otherwise.
std::string rational_str(const Rational& r);

inline double rational_to_double(const Rational& r) { return r.get_d(); }

}  // namespace qabel
