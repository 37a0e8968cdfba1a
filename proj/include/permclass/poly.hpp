#pragma once

#include "permclass/numeric.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permclass {

// Dense univariate polynomial over the integers, ascending coefficients,
// no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  Poly(std::initializer_list<long long> coeffs);

  static Poly monomial(const BigInt& c, int degree);
  static Poly constant(const BigInt& c) { return monomial(c, 0); }
  static Poly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const BigInt& coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const { return c_.back(); }

  BigInt content() const;  // nonnegative gcd of the coefficients
  // Divided by its content, leading coefficient made positive.
  Poly primitive_part() const;
  Poly derivative() const;
  // x^degree * p(1/x)
  Poly reversed() const;
  // p(x) / x^k for the largest such k
  Poly strip_x_factors() const;
  int lowest_degree() const;

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly scaled(const BigInt& k) const;
  Poly pow(int e) const;
  // Truncate to terms of degree < n.
  Poly truncated(int n) const;

  bool operator==(const Poly&) const = default;

  std::string str() const;       // "1 - 2*x - x^3"
  std::string list_str() const;  // "[1,-2,0,-1]"

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Both "1 - 2*x + 3x^2" and "[1,-2,3]". Throws std::invalid_argument.
Poly parse_poly(std::string_view text);

// lc(b)^(deg a - deg b + 1) * a = q * b + r
std::pair<Poly, Poly> pseudo_divmod(const Poly& a, const Poly& b);
// Throws std::domain_error unless b divides a exactly over the integers.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);
// Primitive with positive leading coefficient; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly square_free_part(const Poly& p);

}  // namespace permclass
