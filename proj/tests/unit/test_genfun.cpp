#include "doctest.h"
#include "oracle.hpp"

#include "permclass/algebraic.hpp"
#include "permclass/genfun.hpp"

#include <cmath>
#include <random>

using namespace permclass;

namespace {

std::vector<double> doubles(const Poly& p) {
  std::vector<double> out;
  for (const auto& c : p.coeffs()) out.push_back(static_cast<double>(c));
  return out;
}

std::vector<long long> longs(const Poly& p) {
  std::vector<long long> out;
  for (const auto& c : p.coeffs()) out.push_back(static_cast<long long>(c));
  return out;
}

bool same_series(const std::vector<BigInt>& a, const std::vector<oracle::Big>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != BigInt(b[i])) return false;
  return true;
}

}  // namespace

TEST_SUITE("genfun") {

TEST_CASE("polynomial text forms") {
  CHECK(parse_poly("1 - 2*x - x^3") == Poly{1, -2, 0, -1});
  CHECK(parse_poly("[1,-2,0,-1]") == Poly{1, -2, 0, -1});
  CHECK(parse_poly("1-2x-x^3") == Poly{1, -2, 0, -1});
  CHECK(Poly{1, -2, 0, -1}.str() == "1 - 2*x - x^3");
  CHECK(parse_poly(Poly{3, 0, -7, 12}.str()) == Poly{3, 0, -7, 12});
  CHECK(Poly{1, -2, 0, -1}.list_str() == "[1,-2,0,-1]");
  CHECK_THROWS_AS(parse_poly("1 + y"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
  Poly a{1, -1}, b{1, 1};
  CHECK(a * b == Poly{1, 0, -1});
  CHECK(exact_div(Poly{1, 0, -1}, a) == b);
  CHECK_THROWS_AS(exact_div(Poly{1, 0, 1}, a), std::domain_error);
  CHECK(gcd(Poly{-1, 0, 1}, Poly{1, -2, 1}) == Poly{-1, 1});
  CHECK(square_free_part(Poly{1, -2, 1}) == Poly{-1, 1});
  // a huge coefficient survives a text round trip without octal surprises
  Poly big(std::vector<BigInt>{parse_bigint("012345678901234567890123"), 1});
  CHECK(parse_poly(big.str()) == big);
}

TEST_CASE("series expansion") {
  RationalGF geo(Poly{1}, Poly{1, -1});
  CHECK(series(geo, 4) == std::vector<BigInt>{1, 1, 1, 1, 1});
  RationalGF trib(Poly{1}, Poly{1, -1, -1, -1});
  CHECK(series(trib, 6) == std::vector<BigInt>{1, 1, 2, 4, 7, 13, 24});
  RationalGF osc(Poly{1, -1}, Poly{1, -2, 0, -1});
  CHECK(same_series(series(osc, 40), oracle::series({1, -1}, {1, -2, 0, -1}, 40)));
}

TEST_CASE("series times denominator gives the numerator") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long long> num, den{1};
    for (int i = 0; i < 4; ++i) num.push_back(static_cast<long long>(rng() % 7) - 3);
    for (int i = 0; i < 4; ++i) den.push_back(static_cast<long long>(rng() % 7) - 3);
    RationalGF gf{Poly(std::vector<BigInt>(num.begin(), num.end())), Poly(std::vector<BigInt>(den.begin(), den.end()))};
    auto s = series(gf, 20);
    Poly prod = Poly(s) * gf.denominator();
    CHECK(prod.truncated(21) == gf.numerator());
    CHECK(same_series(s, oracle::series(longs(gf.numerator()), longs(gf.denominator()), 20)));
  }
}

TEST_CASE("sum completion") {
  CHECK(sum_completion_gf(Poly{0, 1, 1, 1}) == RationalGF(Poly{1}, Poly{1, -1, -1, -1}));
  CHECK(sum_completion_gf(Poly{}) == RationalGF(Poly{1}, Poly{1}));
  for (int k = 4; k <= 9; ++k) {
    // (x + x^3 - x^k - x^(k+1)) / (1 - x)
    Poly top = Poly{0, 1, 0, 1} - Poly::monomial(1, k) - Poly::monomial(1, k + 1);
    auto got = sum_completion_gf(RationalGF(top, Poly{1, -1}));
    Poly den = Poly{1, -2, 0, -1} + Poly::monomial(1, k) + Poly::monomial(1, k + 1);
    CHECK(got == RationalGF(Poly{1, -1}, den));
  }
}

TEST_CASE("growth rates") {
  auto k = pringsheim_growth(RationalGF(Poly{1, -1}, Poly{1, -2, 0, -1}));
  CHECK(k.approx() == doctest::Approx(2.20557).epsilon(1e-5));
  CHECK(compare(pringsheim_growth(RationalGF(Poly{1}, Poly{1, -1})), Rational(1)) == 0);
  auto pell = pringsheim_growth(RationalGF(Poly{1}, Poly{1, -2, -1}));
  CHECK(pell.approx() == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-9));
  CHECK(compare(pringsheim_growth(RationalGF::polynomial(Poly{1, 3, 3})), Rational(0)) == 0);
}

TEST_CASE("a cancelled factor does not hide the pole") {
  // (1-3x)/((1-3x)(1-2x)) grows like 2, not 3
  RationalGF g(Poly{1, -3}, Poly{1, -3} * Poly{1, -2});
  CHECK(compare(pringsheim_growth(g), Rational(2)) == 0);
  RationalGF h(Poly{1, -1} * Poly{2, 1}, Poly{1, -2, 0, -1} * Poly{2, 1});
  CHECK(compare(pringsheim_growth(h), pringsheim_growth(RationalGF(Poly{1, -1}, Poly{1, -2, 0, -1}))) == 0);
}

TEST_CASE("largest positive roots") {
  auto nu = largest_positive_root(Poly{1, 2, 1, 1, -1});
  CHECK(nu.approx() == doctest::Approx(2.06599).epsilon(1e-5));
  CHECK(compare(largest_positive_root(Poly{2, -1}), Rational(2)) == 0);
  auto phi = largest_positive_root(Poly{1, 0, -2, 1});
  CHECK(phi.approx() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  CHECK_THROWS_AS(largest_positive_root(Poly{1, 1}), std::domain_error);
  for (const Poly& p : {Poly{1, 0, 2, -1}, Poly{1, 2, 1, 1, -1}, Poly{3, -1, -1, 0, -2, 1}}) {
    auto r = largest_positive_root(p).refined(Rational(1, 1000000000));
    CHECK(r.approx() == doctest::Approx(oracle::largest_root(doubles(p), 0, 10)).epsilon(1e-9));
  }
}

TEST_CASE("root certificates") {
  for (const Poly& p : {Poly{1, 0, 2, -1}, Poly{-2, 0, 1}, Poly{1, -3, 1}}) {
    for (const auto& r : real_roots(p)) {
      CHECK(r.poly().sign_at(r.lo()) * r.poly().sign_at(r.hi()) < 0);
      auto fine = r.refined(Rational(1, 1 << 20));
      CHECK(fine.lo() >= r.lo());
      CHECK(fine.hi() <= r.hi());
      CHECK(fine.width() <= Rational(1, 1 << 20));
    }
  }
  CHECK(real_roots(Poly{-2, 0, 1}).size() == 2);
  CHECK(count_roots(Poly{-2, 0, 1}, 0, 2) == 1);
}

TEST_CASE("algebraic comparison") {
  auto sqrt2 = largest_positive_root(Poly{-2, 0, 1});
  auto three = largest_positive_root(Poly{-2, 0, 1} * Poly{-3, 1});
  CHECK(compare(sqrt2, largest_positive_root(Poly{-2, 0, 1} * Poly{1, 1})) == 0);
  CHECK(compare(sqrt2, three) < 0);
  CHECK(compare(sqrt2, Rational(141421, 100000)) > 0);
  CHECK(compare(sqrt2, Rational(141422, 100000)) < 0);
  CHECK(sqrt2.decimal(6) == "1.414214");  // nearest, not truncated
}

TEST_CASE("empirical growth") {
  CHECK(empirical_growth(std::vector<BigInt>(12, 1)).nth_root == doctest::Approx(1.0));
  auto pell = empirical_growth(series(RationalGF(Poly{1}, Poly{1, -2, -1}), 20));
  CHECK(std::abs(to_double(pell.ratio) - (1 + std::sqrt(2.0))) < 0.05);
  auto osc = empirical_growth(series(RationalGF(Poly{1, -1}, Poly{1, -2, 0, -1}), 20));
  CHECK(std::abs(to_double(osc.ratio) - 2.20557) < 0.05);
  CHECK_THROWS_AS(empirical_growth({1, 1}), std::invalid_argument);
}

}
