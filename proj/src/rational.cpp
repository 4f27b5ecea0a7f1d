#include "qabel/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qabel {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    throw std::invalid_argument("not a rational or decimal value: '" + text + "'");
  };

  std::string s = text;
  // trim surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) bad();

  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) bad();
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) bad();
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
      throw std::invalid_argument("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  }

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (!is_integer_token(whole) || frac.empty()) bad();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    mpz_class digits(whole + frac);
    mpz_class den(1);
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational r(digits, den);
    r.canonicalize();
    return r;
  }

  if (!is_integer_token(s)) bad();
  return Rational(mpz_class(s));
}

std::string rational_str(const Rational& r) {
  return r.get_str();  // "n" or "p/q", canonical
}

}  // namespace qabel
