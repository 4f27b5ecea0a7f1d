#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qabel/rational.hpp"

namespace qabel {

// An arithmetic function f: N -> Q with f(0) = 0 pinned. Values are exact
// rationals regardless of the series backend; conversion to double happens at
// use. Either rule-backed (builtins, defined for all n >= 1) or table-backed
// (defined for 1..table size). Evaluators are pure; instances are immutable
// and safe to share.
class ArithmeticFunction {
 public:
  using Rule = std::function<Rational(unsigned)>;

  static ArithmeticFunction from_rule(std::string name, Rule rule);
  static ArithmeticFunction from_table(std::string name, std::vector<Rational> values_from_1);

  const std::string& name() const { return name_; }
  bool covers(unsigned n) const { return rule_ != nullptr || n <= table_.size(); }

  // f(n); f(0) = 0 always. Throws std::out_of_range past table coverage.
  Rational value(unsigned n) const;
  double value_d(unsigned n) const { return rational_to_double(value(n)); }

 private:
  ArithmeticFunction() = default;
  std::string name_;
  Rule rule_;                    // null for table-backed functions
  std::vector<Rational> table_;  // table_[i] = f(i+1)
};

// Builtins addressable by name: one, even_indicator, odd_indicator,
// indicator_R_M (residue class R mod M, e.g. indicator_1_3), phi_ratio
// (Euler phi(n)/n), moebius, liouville.
ArithmeticFunction builtin_function(const std::string& name);
std::vector<std::string> builtin_function_names();

ArithmeticFunction make_indicator(unsigned r, unsigned m);

// Loads a CSV table with header "n,value"; rows must cover n = 1,2,3,...
// consecutively; value is an integer, decimal, or p/q rational. Malformed
// rows, gaps, and bad values are reported with their line number.
ArithmeticFunction load_function_table(const std::string& path);

}  // namespace qabel
