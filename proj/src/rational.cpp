#include "orbitkit/rational.hpp"

#include <cctype>
#include <ostream>

namespace orbitkit {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational Rational::parse(const std::string& text) {
  std::size_t i = 0, n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  std::size_t start = i;
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < n && std::isdigit((unsigned char)text[i])) { ++i; ++digits; }
  if (digits == 0) throw std::invalid_argument("Rational::parse: no digits in '" + text + "'");
  std::int64_t num = std::stoll(text.substr(start, i - start));
  std::int64_t den = 1;
  skip_ws();
  if (i < n && text[i] == '/') {
    ++i;
    skip_ws();
    std::size_t dstart = i;
    if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
    digits = 0;
    while (i < n && std::isdigit((unsigned char)text[i])) { ++i; ++digits; }
    if (digits == 0) throw std::invalid_argument("Rational::parse: bad denominator in '" + text + "'");
    den = std::stoll(text.substr(dstart, i - dstart));
  }
  skip_ws();
  if (i != n) throw std::invalid_argument("Rational::parse: trailing characters in '" + text + "'");
  return Rational(num, den);
}

} // namespace orbitkit
