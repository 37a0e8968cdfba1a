#include "permclass/genfun.hpp"

#include <cmath>
#include <stdexcept>

namespace permclass {

RationalGF::RationalGF(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (den.coeff(0) == 0) throw std::domain_error("denominator vanishes at 0: no power series");
  Poly g = gcd(num, den);
  if (!num.is_zero() && g.degree() >= 1) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  BigInt c = boost::multiprecision::gcd(num.content(), den.content());
  if (num.is_zero()) c = den.content();
  if (den.coeff(0) < 0) c = -c;
  if (c != 1) {
    std::vector<BigInt> n = num.coeffs(), d = den.coeffs();
    for (auto& x : n) x /= c;
    for (auto& x : d) x /= c;
    num = Poly(std::move(n));
    den = Poly(std::move(d));
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalGF RationalGF::operator+(const RationalGF& o) const {
  return RationalGF(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalGF RationalGF::operator-(const RationalGF& o) const {
  return RationalGF(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalGF RationalGF::operator*(const RationalGF& o) const { return RationalGF(num_ * o.num_, den_ * o.den_); }

std::string RationalGF::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

std::vector<BigInt> series(const RationalGF& gf, int nmax) {
  const Poly& p = gf.numerator();
  const Poly& q = gf.denominator();
  const BigInt& q0 = q.coeff(0);
  std::vector<BigInt> a(nmax + 1, 0);
  for (int n = 0; n <= nmax; ++n) {
    BigInt acc = p.coeff(n);
    for (int k = 1; k <= std::min(n, q.degree()); ++k) acc -= q.coeff(k) * a[n - k];
    if (acc % q0 != 0) throw std::domain_error("series has non-integer coefficients");
    a[n] = acc / q0;
  }
  return a;
}

RationalGF sum_completion_gf(const RationalGF& f) {
  if (f.numerator().coeff(0) != 0) throw std::domain_error("sum completion needs f(0) = 0");
  return RationalGF(f.denominator(), f.denominator() - f.numerator());
}

AlgebraicNumber pringsheim_growth(const RationalGF& gf) {
  Poly den = gf.denominator();
  if (den.degree() < 1) return AlgebraicNumber::rational(0);
  // the positive roots of the reversal are the reciprocals of those of den
  return largest_positive_root(den.reversed());
}

GrowthEstimate empirical_growth(const std::vector<BigInt>& counts) {
  if (counts.size() < 3) throw std::invalid_argument("growth estimate needs at least three terms");
  int n = static_cast<int>(counts.size()) - 1;
  GrowthEstimate g;
  g.n = n;
  if (counts[n] == 0 || counts[n - 1] == 0) {
    g.ratio = 0;
    g.nth_root = 0;
    return g;
  }
  g.ratio = Rational(counts[n], counts[n - 1]);
  // log of a big integer via its leading digits
  std::string s = counts[n].str();
  int digits = static_cast<int>(s.size());
  double lead = std::stod(s.substr(0, std::min(17, digits)));
  double lg = std::log(lead) + std::log(10.0) * (digits - std::min(17, digits));
  g.nth_root = std::exp(lg / n);
  return g;
}

}  // namespace permclass
