#include "qabel/arith_function.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qabel {

ArithmeticFunction ArithmeticFunction::from_rule(std::string name, Rule rule) {
  ArithmeticFunction f;
  f.name_ = std::move(name);
  f.rule_ = std::move(rule);
  return f;
}

ArithmeticFunction ArithmeticFunction::from_table(std::string name,
                                                  std::vector<Rational> values_from_1) {
  ArithmeticFunction f;
  f.name_ = std::move(name);
  f.table_ = std::move(values_from_1);
  return f;
}

Rational ArithmeticFunction::value(unsigned n) const {
  if (n == 0) return Rational(0);
  if (rule_) return rule_(n);
  if (n > table_.size())
    throw std::out_of_range("function '" + name_ + "' tabulated only up to n=" +
                            std::to_string(table_.size()) + ", requested n=" + std::to_string(n));
  return table_[n - 1];
}

namespace {

// Trial-division factor scan; n stays below ~10^5 in practice, so this is
// cheaper than carrying a sieve around.
template <typename PerPrime>
void for_each_prime_factor(unsigned n, PerPrime&& f) {
  for (unsigned p = 2; static_cast<unsigned long long>(p) * p <= n; ++p) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f(p, e);
    }
  }
  if (n > 1) f(n, 1u);
}

Rational phi_ratio(unsigned n) {
  Rational r(1);
  for_each_prime_factor(n, [&](unsigned p, unsigned) { r *= Rational(p - 1, p); });
  return r;
}

Rational moebius(unsigned n) {
  int result = 1;
  bool squarefree = true;
  for_each_prime_factor(n, [&](unsigned, unsigned e) {
    if (e > 1) squarefree = false;
    result = -result;
  });
  return squarefree ? Rational(result) : Rational(0);
}

Rational liouville(unsigned n) {
  unsigned omega = 0;
  for_each_prime_factor(n, [&](unsigned, unsigned e) { omega += e; });
  return Rational(omega % 2 == 0 ? 1 : -1);
}

}  // namespace

ArithmeticFunction make_indicator(unsigned r, unsigned m) {
  if (m == 0) throw std::invalid_argument("indicator modulus must be >= 1");
  const std::string name = "indicator_" + std::to_string(r) + "_" + std::to_string(m);
  return ArithmeticFunction::from_rule(
      name, [r, m](unsigned n) { return Rational(n % m == r % m ? 1 : 0); });
}

std::vector<std::string> builtin_function_names() {
  return {"one",       "even_indicator", "odd_indicator", "indicator_R_M (e.g. indicator_1_3)",
          "phi_ratio", "moebius",        "liouville"};
}

ArithmeticFunction builtin_function(const std::string& name) {
  if (name == "one")
    return ArithmeticFunction::from_rule("one", [](unsigned) { return Rational(1); });
  if (name == "even_indicator") return make_indicator(0, 2);
  if (name == "odd_indicator") return make_indicator(1, 2);
  if (name == "phi_ratio") return ArithmeticFunction::from_rule("phi_ratio", phi_ratio);
  if (name == "moebius") return ArithmeticFunction::from_rule("moebius", moebius);
  if (name == "liouville") return ArithmeticFunction::from_rule("liouville", liouville);
  if (name.rfind("indicator_", 0) == 0) {
    const std::string params = name.substr(10);
    const auto sep = params.find('_');
    if (sep != std::string::npos) {
      try {
        const unsigned r = static_cast<unsigned>(std::stoul(params.substr(0, sep)));
        const unsigned m = static_cast<unsigned>(std::stoul(params.substr(sep + 1)));
        return make_indicator(r, m);
      } catch (const std::logic_error&) {
        // fall through to the unknown-name error
      }
    }
  }
  std::string known;
  for (const auto& k : builtin_function_names()) known += (known.empty() ? "" : ", ") + k;
  throw std::invalid_argument("unknown arithmetic function '" + name + "'; valid names: " + known);
}

ArithmeticFunction load_function_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open function table '" + path + "'");

  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  ++lineno;
  // strip optional BOM and trailing CR
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "n,value")
    throw std::runtime_error(path + ":1: expected header 'n,value', got '" + line + "'");

  std::vector<Rational> values;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": missing comma");
    const std::string n_text = line.substr(0, comma);
    const std::string value_text = line.substr(comma + 1);
    unsigned long n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(n_text, &used);
      if (used != n_text.size()) throw std::invalid_argument(n_text);
    } catch (const std::logic_error&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad index '" + n_text + "'");
    }
    if (n != values.size() + 1)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected n=" +
                               std::to_string(values.size() + 1) + ", got n=" + std::to_string(n) +
                               " (rows must be consecutive from 1)");
    try {
      values.push_back(parse_rational(value_text));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (values.empty()) throw std::runtime_error(path + ": no data rows");

  // derive a stable name from the file stem
  auto slash = path.find_last_of("/\\");
  std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = stem.find_last_of('.');
  if (dot != std::string::npos) stem = stem.substr(0, dot);
  return ArithmeticFunction::from_table("table:" + stem, std::move(values));
}

}  // namespace qabel
