#include "permclass/numeric.hpp"

#include <stdexcept>

namespace permclass {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_decimal(const Rational& q, int digits) {
  BigInt num = numerator(q), den = denominator(q);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * scale / den;
  BigInt whole = scaled / scale, frac = scaled % scale;
  std::string f = frac.str();
  while (static_cast<int>(f.size()) < digits) f = "0" + f;
  std::string out = (neg && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) out += "." + f;
  return out;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
  if (i == text.size()) throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad integer '" + std::string(text) + "'");
    v = v * 10 + (ch - '0');
  }
  return neg ? BigInt(-v) : v;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_bigint(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational(parse_bigint(digits), den);
  }
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(parse_bigint(text.substr(0, slash)), den);
}

}  // namespace permclass
