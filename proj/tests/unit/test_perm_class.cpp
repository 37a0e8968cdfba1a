#include "doctest.h"
#include "oracle.hpp"

#include "permclass/genfun.hpp"
#include "permclass/perm_class.hpp"
#include "permclass/witness.hpp"

#include <random>
#include <sstream>

using namespace permclass;

namespace {

Perm P(const char* s) { return parse_perm(s); }

std::vector<oracle::Seq> seqs(const std::vector<Perm>& ps) {
  std::vector<oracle::Seq> out;
  for (const auto& p : ps) out.push_back(p.values());
  return out;
}

}  // namespace

TEST_SUITE("perm_class") {

TEST_CASE("basis normalization") {
  CHECK(normalize_basis({P("21"), P("321")}).basis() == std::vector<Perm>{P("21")});
  std::vector<Perm> u_class{P("321"),    P("3412"),   P("4123"),   P("23451"),
                            P("134526"), P("134625"), P("314526"), P("314625")};
  auto c = normalize_basis(u_class);
  CHECK(c.basis().size() == 8);
  CHECK(normalize_basis({P("1")}).basis() == std::vector<Perm>{P("1")});
  CHECK_THROWS(normalize_basis({}));
}

TEST_CASE("avoidance") {
  CHECK(avoids(P("123"), normalize_basis({P("21")})));
  CHECK_FALSE(avoids(P("391867452"), normalize_basis({P("51342")})));
  CHECK(avoids(Perm{}, normalize_basis({P("1")})));
}

TEST_CASE("small enumerations") {
  auto e = enumerate(normalize_basis({P("12")}), 5);
  CHECK(e.counts == CountSequence{1, 1, 1, 1, 1, 1});
  CHECK(enumerate(normalize_basis({P("12"), P("21")}), 3).counts == CountSequence{1, 1, 0, 0});
}

TEST_CASE("enumeration against brute force") {
  for (auto basis : {std::vector<Perm>{P("321"), P("2341"), P("3412"), P("4123")},
                     std::vector<Perm>{P("231")}, std::vector<Perm>{P("4321"), P("1324")}}) {
    auto c = normalize_basis(basis);
    auto got = enumerate(c, 7).counts;
    auto want = oracle::class_counts(seqs(c.basis()), 7);
    for (int n = 0; n <= 7; ++n) CHECK(got[n] == want[n]);
  }
}

TEST_CASE("oscillation class counts follow the rational generating function") {
  auto got = enumerate(normalize_basis({P("321"), P("2341"), P("3412"), P("4123")}), 10).counts;
  auto want = oracle::series({1, -1}, {1, -2, 0, -1}, 10);
  for (int n = 0; n <= 10; ++n) CHECK(got[n] == BigInt(want[n]));
}

TEST_CASE("members are downward closed") {
  auto e = enumerate(normalize_basis({P("321"), P("2341")}), 7);
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : e.members[n])
      for (int i = 0; i < n; ++i)
        REQUIRE(std::binary_search(e.members[n - 1].begin(), e.members[n - 1].end(), delete_entry(p, i)));
}

TEST_CASE("budget marks partial enumerations") {
  auto e = enumerate(normalize_basis({P("4321")}), 40, Budget::seconds(0.05));
  CHECK_FALSE(e.complete);
}

TEST_CASE("closures") {
  auto c = closure({P("21")});
  CHECK(c.members() == std::set<Perm>{Perm{}, P("1"), P("21")});
  // distinct nonempty patterns of 2413 by subset search
  std::set<oracle::Seq> pats;
  oracle::Seq g{2, 4, 1, 3};
  for (unsigned mask = 1; mask < 16; ++mask) {
    oracle::Seq sub;
    for (int i = 0; i < 4; ++i)
      if (mask >> i & 1) sub.push_back(g[i]);
    pats.insert(oracle::standardize(sub));
  }
  CHECK(closure({P("2413")}).size() - 1 == pats.size());
  CHECK(pats.size() == 8);
  CHECK_FALSE(in_O(P("1432")));
  auto top = closure({P("1432")}).of_length(4);
  REQUIRE(top.size() == 1);
  CHECK_FALSE(in_O(top[0]));
}

TEST_CASE("sum indecomposables inside closures") {
  CHECK(sum_indecomposables_in(closure({P("251364")}), 6) == CountSequence{0, 1, 1, 2, 3, 3, 1});
  CHECK(sum_indecomposables_in(closure({P("1432")}), 4) == CountSequence{0, 1, 1, 1, 0});
  CHECK(sum_indecomposables_in(closure({P("12")}), 2) == CountSequence{0, 1, 0});
}

TEST_CASE("sum closure counts") {
  auto c = sum_closure_counts({P("1432")}, 12);
  auto want = oracle::series({1}, {1, -1, -1, -1}, 12);
  for (int n = 0; n <= 12; ++n) CHECK(c[n] == BigInt(want[n]));
  CHECK(sum_closure_counts({P("1")}, 6) == CountSequence(7, 1));
  auto big = sum_closure_counts({P("251364")}, 12);
  auto want2 = oracle::series({1}, {1, -1, -1, -2, -3, -3, -1}, 12);
  for (int n = 0; n <= 12; ++n) CHECK(big[n] == BigInt(want2[n]));
}

TEST_CASE("sum closure counts match a direct enumeration") {
  SumClosureClass s({P("2413")});
  auto direct = enumerate_class([&](const Perm& p) { return s.contains(p); }, 8).counts;
  CHECK(direct == sum_closure_counts({P("2413")}, 8));
}

TEST_CASE("sum completion of the indecomposables gives the sum closure") {
  for (auto gens : {std::vector<Perm>{P("2413")}, std::vector<Perm>{P("3142"), P("321")}, std::vector<Perm>{P("25314")}}) {
    auto f = sum_indecomposables_in(closure(gens), 6);
    auto gf = sum_completion_gf(Poly(f));
    CHECK(series(gf, 11) == sum_closure_counts(gens, 11));
  }
}

TEST_CASE("supermultiplicativity of sum closed classes") {
  auto c = sum_closure_counts({P("2413"), P("321")}, 14);
  for (int m = 1; m <= 13; ++m)
    for (int n = 1; m + n <= 14; ++n) CHECK(c[m] * c[n] <= c[m + n]);
}

TEST_CASE("antichains") {
  std::vector<Perm> u;
  for (int m = 1; m <= 8; ++m) u.push_back(u_antichain(m));
  CHECK(is_antichain(u));
  CHECK_FALSE(is_antichain({P("1"), P("12")}));
  CHECK(is_antichain(basis_WO()));
}

TEST_CASE("wreath closure membership") {
  auto oracle_O = [](const Perm& p) { return in_O(p); };
  CHECK(in_wreath_closure(P("1432"), oracle_O));
  CHECK_FALSE(in_wreath_closure(P("25314"), oracle_O));
  for (int k = 1; k <= 8; ++k)
    for (const auto& p : increasing_oscillations(k)) CHECK(in_wreath_closure(p, oracle_O));
  for (int n = 1; n <= 7; ++n)
    for_each_perm(n, [&](const Perm& p) { REQUIRE(in_wreath_closure(p, oracle_O) == in_WO(p)); });
}

TEST_CASE("two indecomposables propagate downward") {
  // a single generator closure with two sum indecomposables of length
  // n >= 4 has two of length n - 1
  for (int len = 4; len <= 6; ++len)
    for_each_perm(len, [&](const Perm& g) {
      auto f = sum_indecomposables_in(closure({g}), len);
      for (int n = 4; n <= len; ++n)
        if (f[n] >= 2) REQUIRE(f[n - 1] >= 2);
    });
}

TEST_CASE("long permutations contain long monotone patterns") {
  for_each_perm(5, [&](const Perm& p) { REQUIRE((contains(P("123"), p) || contains(P("321"), p))); });
  std::mt19937 rng(17);
  std::vector<int> v(10);
  std::iota(v.begin(), v.end(), 1);
  for (int trial = 0; trial < 100000; ++trial) {
    std::shuffle(v.begin(), v.end(), rng);
    Perm p(v);
    REQUIRE((contains(P("1234"), p) || contains(P("4321"), p)));
  }
}

TEST_CASE("basis files") {
  std::istringstream in("# oscillations\n321\n\n2341 # trailing\n3412\n4123\n");
  CHECK(read_perm_list(in) == std::vector<Perm>{P("321"), P("2341"), P("3412"), P("4123")});
}

}
