#pragma once

#include "permclass/poly.hpp"

#include <string>
#include <vector>

namespace permclass {

// A real root of a square-free primitive polynomial, isolated in the open
// interval (lo, hi): poly has opposite nonzero signs at lo and hi and
// exactly one root in between.
class AlgebraicNumber {
 public:
  AlgebraicNumber(Poly poly, Rational lo, Rational hi);
  static AlgebraicNumber rational(const Rational& q);

  const Poly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }

  // Bisect until the width is at most eps; the result's interval is
  // nested inside this one.
  AlgebraicNumber refined(const Rational& eps) const;
  AlgebraicNumber bisected() const;

  double approx() const;
  // Decimal to the given number of places, from an interval of width
  // well below 10^-digits.
  std::string decimal(int digits = 6) const;
  std::string interval_str() const;  // "[lo, hi]" exact

 private:
  Poly poly_;
  Rational lo_, hi_;
};

// -1, 0, 1; equality is proven through the gcd of the defining polynomials.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
int compare(const AlgebraicNumber& a, const Rational& q);
inline bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == 0; }
inline bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; }

// Sturm chain of a square-free polynomial.
std::vector<Poly> sturm_sequence(const Poly& p);
int sign_variations(const std::vector<Poly>& chain, const Rational& x);
// Number of distinct real roots in the open interval (lo, hi).
int count_roots(const Poly& p, const Rational& lo, const Rational& hi);

// All distinct real roots, ascending.
std::vector<AlgebraicNumber> real_roots(const Poly& p);
// Throws std::domain_error when p has no positive root.
AlgebraicNumber largest_positive_root(const Poly& p);
AlgebraicNumber smallest_positive_root(const Poly& p);

// An integer bound on the absolute value of every root.
BigInt cauchy_bound(const Poly& p);

}  // namespace permclass
