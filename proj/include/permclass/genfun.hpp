#pragma once

#include "permclass/algebraic.hpp"
#include "permclass/poly.hpp"

#include <string>
#include <vector>

namespace permclass {

// num/den in lowest terms, den(0) > 0, integer content removed jointly.
class RationalGF {
 public:
  RationalGF() : num_(Poly::constant(0)), den_(Poly::constant(1)) {}
  RationalGF(Poly num, Poly den);
  static RationalGF polynomial(Poly p) { return RationalGF(std::move(p), Poly::constant(1)); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  RationalGF operator+(const RationalGF& o) const;
  RationalGF operator-(const RationalGF& o) const;
  RationalGF operator*(const RationalGF& o) const;
  bool operator==(const RationalGF&) const = default;

  std::string str() const;  // "(num)/(den)"

 private:
  Poly num_, den_;
};

// First nmax+1 Taylor coefficients. Throws std::domain_error when a
// coefficient is not an integer.
std::vector<BigInt> series(const RationalGF& gf, int nmax);

// 1/(1 - f), reduced. f must vanish at 0.
RationalGF sum_completion_gf(const RationalGF& f);
inline RationalGF sum_completion_gf(const Poly& f) { return sum_completion_gf(RationalGF::polynomial(f)); }

// Reciprocal of the smallest positive root of the reduced denominator.
// A polynomial (pole-free) series has growth rate 0.
AlgebraicNumber pringsheim_growth(const RationalGF& gf);

struct GrowthEstimate {
  Rational ratio;   // c_n / c_{n-1} at the last usable index
  double nth_root;  // c_n^(1/n)
  int n;
};
// Throws std::invalid_argument for fewer than three terms.
GrowthEstimate empirical_growth(const std::vector<BigInt>& counts);

}  // namespace permclass
