#include "permclass/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace permclass {

namespace {
const BigInt kZero = 0;
}

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) c_.emplace_back(c);
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(v));
}

const BigInt& Poly::coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : kZero; }

BigInt Poly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
  return abs(g);
}

Poly Poly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v = c_;
  for (auto& c : v) c /= g;
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  std::vector<BigInt> v;
  for (int i = 1; i <= degree(); ++i) v.push_back(c_[i] * i);
  return Poly(std::move(v));
}

Poly Poly::reversed() const {
  std::vector<BigInt> v(c_.rbegin(), c_.rend());
  return Poly(std::move(v));
}

int Poly::lowest_degree() const {
  for (int i = 0; i <= degree(); ++i)
    if (c_[i] != 0) return i;
  return -1;
}

Poly Poly::strip_x_factors() const {
  int k = lowest_degree();
  if (k <= 0) return *this;
  return Poly(std::vector<BigInt>(c_.begin() + k, c_.end()));
}

BigInt Poly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

int Poly::sign_at(const Rational& x) const {
  // Homogenized evaluation avoids rational normalization at every step.
  const BigInt a = numerator(x), b = denominator(x);
  BigInt acc = 0, bpow = 1;
  for (int i = degree(); i >= 0; --i) {
    acc = acc * a + c_[i] * bpow;
    bpow *= b;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

Poly Poly::operator-() const {
  std::vector<BigInt> v = c_;
  for (auto& c : v) c = -c;
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0)
      for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  c_ = std::move(v);
  trim();
  return *this;
}

Poly Poly::scaled(const BigInt& k) const {
  std::vector<BigInt> v = c_;
  for (auto& c : v) c *= k;
  return Poly(std::move(v));
}

Poly Poly::pow(int e) const {
  Poly acc = Poly::constant(1), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::truncated(int n) const {
  if (n >= static_cast<int>(c_.size())) return *this;
  return Poly(std::vector<BigInt>(c_.begin(), c_.begin() + std::max(0, n)));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string Poly::list_str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += c_[i].str();
  }
  return out + "]";
}

Poly parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&]() { return std::invalid_argument("bad polynomial '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();

  if (s.front() == '[') {
    if (s.back() != ']') throw fail();
    std::vector<BigInt> v;
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return {};
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      v.push_back(parse_bigint(tok));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return Poly(std::move(v));
  }

  std::vector<BigInt> v;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    BigInt sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      throw fail();
    }
    first = false;
    std::size_t d = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    BigInt coef = d == i ? BigInt(1) : parse_bigint(s.substr(d, i - d));
    bool had_digits = d != i;
    int exp = 0;
    if (i < s.size() && s[i] == '*') {
      if (!had_digits) throw fail();
      ++i;
      if (i >= s.size() || s[i] != 'x') throw fail();
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t e = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (e == i) throw fail();
        exp = std::stoi(s.substr(e, i - e));
      }
    } else if (!had_digits) {
      throw fail();
    }
    if (static_cast<int>(v.size()) <= exp) v.resize(exp + 1, 0);
    v[exp] += sign * coef;
  }
  return Poly(std::move(v));
}

std::pair<Poly, Poly> pseudo_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(a.degree() - db + 1, 0);
  const BigInt& lc = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    // multiply everything accumulated so far by lc, then eliminate r[k]
    for (auto& c : q) c *= lc;
    BigInt t = r[k];
    for (int i = 0; i <= k; ++i) r[i] *= lc;
    q[k - db] += t;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= t * b.coeff(i);
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  int db = b.degree();
  if (a.degree() < db) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(a.degree() - db + 1, 0);
  const BigInt& lc = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    if (r[k] % lc != 0) throw std::domain_error("inexact polynomial division");
    BigInt t = r[k] / lc;
    q[k - db] = t;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= t * b.coeff(i);
  }
  for (const auto& c : r)
    if (c != 0) throw std::domain_error("inexact polynomial division");
  return Poly(std::move(q));
}

bool divides(const Poly& b, const Poly& a) {
  try {
    exact_div(a, b);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  Poly x = a.is_zero() ? Poly() : a.primitive_part();
  Poly y = b.is_zero() ? Poly() : b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = pseudo_divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? Poly() : r.primitive_part();
  }
  return x.primitive_part();
}

Poly square_free_part(const Poly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Poly::constant(1);
  Poly g = gcd(p, p.derivative());
  return exact_div(p.primitive_part(), g);
}

}  // namespace permclass
