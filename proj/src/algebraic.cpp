#include "permclass/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace permclass {

namespace {

Poly divide_by_content(const Poly& p) {
  if (p.is_zero()) return p;
  BigInt g = p.content();
  std::vector<BigInt> v = p.coeffs();
  for (auto& c : v) c /= g;
  return Poly(std::move(v));
}

// (den*x - num), the primitive linear factor vanishing at q
Poly linear_factor(const Rational& q) { return Poly(std::vector<BigInt>{-numerator(q), denominator(q)}); }

Rational pow10_inv(int digits) {
  BigInt d = 1;
  for (int i = 0; i < digits; ++i) d *= 10;
  return Rational(1, d);
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(Poly poly, Rational lo, Rational hi)
    : poly_(poly.primitive_part()), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (poly_.degree() < 1) throw std::invalid_argument("algebraic number needs a nonconstant polynomial");
  if (!(lo_ < hi_)) throw std::invalid_argument("empty isolating interval");
  int a = poly_.sign_at(lo_), b = poly_.sign_at(hi_);
  if (a == 0 || b == 0 || a == b) throw std::invalid_argument("interval does not isolate a sign change");
}

AlgebraicNumber AlgebraicNumber::rational(const Rational& q) {
  return AlgebraicNumber(linear_factor(q), q - 1, q + 1);
}

AlgebraicNumber AlgebraicNumber::bisected() const {
  Rational mid = (lo_ + hi_) / 2;
  int s = poly_.sign_at(mid);
  if (s == 0) {
    Rational quarter = (hi_ - lo_) / 4;
    return AlgebraicNumber(poly_, mid - quarter, mid + quarter);
  }
  if (s != poly_.sign_at(lo_)) return AlgebraicNumber(poly_, lo_, mid);
  return AlgebraicNumber(poly_, mid, hi_);
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& eps) const {
  AlgebraicNumber cur = *this;
  while (cur.width() > eps) cur = cur.bisected();
  return cur;
}

double AlgebraicNumber::approx() const {
  auto r = refined(Rational(1, BigInt(1) << 60));
  return to_double((r.lo_ + r.hi_) / 2);
}

std::string AlgebraicNumber::decimal(int digits) const {
  auto r = refined(pow10_inv(digits + 3));
  Rational mid = (r.lo_ + r.hi_) / 2;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = mid * scale + Rational(1, 2);
  // floor
  BigInt fl = numerator(scaled) / denominator(scaled);
  if (scaled < 0 && Rational(fl) != scaled) fl -= 1;
  return to_decimal(Rational(fl, scale), digits);
}

std::string AlgebraicNumber::interval_str() const { return "[" + to_string(lo_) + ", " + to_string(hi_) + "]"; }

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  while (chain.back().degree() > 0) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    Poly r = pseudo_divmod(a, b).second;
    if (r.is_zero()) break;
    // prem = lc(b)^delta * a - q*b; the true remainder has the sign of prem/lc^delta
    int delta = a.degree() - b.degree() + 1;
    bool flip = b.leading() < 0 && delta % 2 == 1;
    Poly next = flip ? r : -r;
    chain.push_back(divide_by_content(next));
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int last = 0, changes = 0;
  for (const auto& q : chain) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_roots(const Poly& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return 0;
  Poly q = square_free_part(p);
  if (q.degree() < 1) return 0;
  if (q.sign_at(lo) == 0) q = exact_div(q, linear_factor(lo));
  if (q.sign_at(hi) == 0) q = exact_div(q, linear_factor(hi));
  if (q.degree() < 1) return 0;
  auto chain = sturm_sequence(q);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

BigInt cauchy_bound(const Poly& p) {
  if (p.degree() < 1) return 1;
  BigInt lc = abs(p.leading());
  BigInt m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, BigInt(abs(p.coeff(i))));
  return 2 + (m + lc - 1) / lc;
}

namespace {

void isolate(const Poly& q, const std::vector<Poly>& chain, const Rational& lo, const Rational& hi,
             std::vector<AlgebraicNumber>& out) {
  int n = sign_variations(chain, lo) - sign_variations(chain, hi);
  if (n == 0) return;
  if (n == 1) {
    out.emplace_back(q, lo, hi);
    return;
  }
  // split at a non-root point, preferring the midpoint
  Rational w = hi - lo, mid = lo + w / 2;
  for (int den = 3; q.sign_at(mid) == 0; ++den) mid = lo + w / den;
  isolate(q, chain, lo, mid, out);
  isolate(q, chain, mid, hi, out);
}

std::vector<AlgebraicNumber> roots_in(const Poly& q, const Rational& lo, const Rational& hi) {
  std::vector<AlgebraicNumber> out;
  isolate(q, sturm_sequence(q), lo, hi, out);
  return out;
}

}  // namespace

std::vector<AlgebraicNumber> real_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("the zero polynomial has every real root");
  Poly q = square_free_part(p);
  std::vector<AlgebraicNumber> out;
  if (q.degree() < 1) return out;
  bool zero_root = q.coeff(0) == 0;
  q = q.strip_x_factors();
  Rational b(cauchy_bound(q));
  if (q.degree() >= 1) {
    auto neg = roots_in(q, -b, 0);
    out.insert(out.end(), neg.begin(), neg.end());
  }
  if (zero_root) out.push_back(AlgebraicNumber::rational(0));
  if (q.degree() >= 1) {
    auto pos = roots_in(q, 0, b);
    out.insert(out.end(), pos.begin(), pos.end());
  }
  return out;
}

namespace {

std::vector<AlgebraicNumber> positive_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("the zero polynomial has every real root");
  Poly q = square_free_part(p).strip_x_factors();
  if (q.degree() < 1) return {};
  return roots_in(q, 0, Rational(cauchy_bound(q)));
}

}  // namespace

AlgebraicNumber largest_positive_root(const Poly& p) {
  auto roots = positive_roots(p);
  if (roots.empty()) throw std::domain_error("no positive real root of " + p.str());
  return roots.back();
}

AlgebraicNumber smallest_positive_root(const Poly& p) {
  auto roots = positive_roots(p);
  if (roots.empty()) throw std::domain_error("no positive real root of " + p.str());
  return roots.front();
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber x = a, y = b;
  Poly g = gcd(a.poly(), b.poly());
  while (true) {
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    if (g.degree() >= 1) {
      Rational lo = std::max(x.lo(), y.lo()), hi = std::min(x.hi(), y.hi());
      if (count_roots(g, lo, hi) > 0) return 0;
    }
    x = x.bisected();
    y = y.bisected();
  }
}

int compare(const AlgebraicNumber& a, const Rational& q) {
  AlgebraicNumber x = a;
  while (true) {
    if (x.hi() <= q) return -1;
    if (q <= x.lo()) return 1;
    if (x.poly().sign_at(q) == 0) return 0;
    x = x.bisected();
  }
}

}  // namespace permclass
