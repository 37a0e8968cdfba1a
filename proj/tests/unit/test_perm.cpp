#include "doctest.h"
#include "oracle.hpp"

#include "permclass/perm.hpp"

#include <random>
#include <set>

using namespace permclass;

namespace {

Perm P(const char* s) { return parse_perm(s); }

}  // namespace

TEST_SUITE("perm") {

TEST_CASE("containment on the worked example") {
  CHECK(contains(P("51342"), P("391867452")));
  CHECK(contains(P("1"), P("21")));
  CHECK_FALSE(contains(P("12"), P("21")));
  auto emb = find_embedding(P("51342"), P("391867452"));
  REQUIRE(emb);
  std::vector<int> vals;
  for (int i : *emb) vals.push_back(P("391867452")(i + 1));
  CHECK(Perm::standardize(vals) == P("51342"));
}

TEST_CASE("containment agrees with subset search") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6), k = 1 + static_cast<int>(rng() % 4);
    std::vector<int> t(n), s(k);
    std::iota(t.begin(), t.end(), 1);
    std::iota(s.begin(), s.end(), 1);
    std::shuffle(t.begin(), t.end(), rng);
    std::shuffle(s.begin(), s.end(), rng);
    CHECK(contains(Perm(s), Perm(t)) == oracle::contains(s, t));
  }
}

TEST_CASE("restrict") {
  CHECK(restrict(P("391867452"), {3, 7}, {2, 6}) == P("21"));
  CHECK(restrict(P("391867452"), {1, 2}, {1, 9}) == P("12"));
  CHECK(restrict(P("391867452"), {1, 9}, {1, 9}) == P("391867452"));
}

TEST_CASE("intervals and simplicity") {
  auto blocks = proper_intervals(P("479832156"));
  CHECK(std::find(blocks.begin(), blocks.end(), Block{{2, 4}, {7, 9}}) != blocks.end());
  CHECK(proper_intervals(P("2413")).empty());
  CHECK(proper_intervals(P("12")).empty());
  CHECK(is_simple(P("2413")));
  CHECK_FALSE(is_simple(P("479832156")));
  CHECK(is_simple(P("1")));
  for (int n = 3; n <= 7; ++n)
    for_each_perm(n, [&](const Perm& p) { CHECK(is_simple(p) == oracle::is_simple(p.values())); });
}

TEST_CASE("inflation and decomposition") {
  std::vector<Perm> comps{P("1"), P("132"), P("321"), P("12")};
  CHECK(inflate(P("2413"), comps) == P("479832156"));
  std::vector<Perm> ones(4, P("1"));
  CHECK(inflate(P("2413"), ones) == P("2413"));
  std::vector<Perm> sum{P("12"), P("1")};
  CHECK(inflate(P("12"), sum) == P("123"));

  auto d = simple_decomposition(P("479832156"));
  CHECK(d.skeleton == P("2413"));
  CHECK(d.components == comps);
  auto inc = simple_decomposition(P("123"));
  CHECK(inc.skeleton == P("12"));
  CHECK(inc.components == std::vector<Perm>{P("1"), P("12")});
  CHECK(simple_decomposition(P("2413")).components == ones);
}

TEST_CASE("decomposition round trip through n = 7") {
  for (int n = 2; n <= 7; ++n)
    for_each_perm(n, [&](const Perm& p) {
      auto d = simple_decomposition(p);
      REQUIRE(inflate(d.skeleton, d.components) == p);
    });
}

TEST_CASE("permutation graphs") {
  CHECK(perm_graph(P("12")).edges().empty());
  CHECK(perm_graph(P("21")).edges().size() == 1);
  // the plotted antichain member u_4 and its drawn inversion graph
  Perm u4{2, 3, 5, 1, 7, 4, 9, 6, 11, 8, 12, 13, 10};
  std::vector<std::pair<int, int>> drawn{{1, 4}, {2, 4}, {3, 4},  {3, 6},   {5, 6},   {5, 8},
                                         {7, 8}, {7, 10}, {9, 10}, {9, 13}, {11, 13}, {12, 13}};
  auto e = perm_graph(u4).edges();
  std::sort(e.begin(), e.end());
  CHECK(e == drawn);
}

TEST_CASE("indecomposability") {
  CHECK(is_sum_indecomposable(P("21")));
  CHECK_FALSE(is_sum_indecomposable(P("12")));
  int count = 0;
  for_each_perm(4, [&](const Perm& p) { count += is_sum_indecomposable(p) ? 1 : 0; });
  CHECK(count == 13);
  for (int n = 1; n <= 7; ++n)
    for_each_perm(n, [&](const Perm& p) {
      REQUIRE(is_sum_indecomposable(p) == is_sum_indecomposable_by_path(p));
      REQUIRE(is_sum_indecomposable(p) == oracle::is_sum_indecomposable(p.values()));
    });
}

TEST_CASE("sums and symmetries") {
  CHECK(direct_sum(P("1"), P("1")) == P("12"));
  CHECK(direct_sum(P("21"), P("1")) == P("213"));
  CHECK(skew_sum(P("1"), P("12")) == P("312"));
  CHECK(reverse(P("123")) == P("321"));
  CHECK(inverse(P("2413")) == P("3142"));
  std::set<Perm> orbit;
  for (const auto& s : Symmetry::all()) orbit.insert(s.apply(P("25314")));
  CHECK(symmetry_orbit(P("25314")).size() == orbit.size());
  for (int n = 1; n <= 6; ++n)
    for_each_perm(n, [&](const Perm& p) {
      REQUIRE(reverse(reverse(p)) == p);
      REQUIRE(complement(complement(p)) == p);
      REQUIRE(inverse(inverse(p)) == p);
      REQUIRE(reverse(complement(p)) == complement(reverse(p)));
      REQUIRE(inverse(reverse(p)) == complement(inverse(p)));
    });
}

TEST_CASE("containment is a partial order") {
  for (int n = 1; n <= 7; ++n) for_each_perm(n, [&](const Perm& p) { REQUIRE(contains(p, p)); });
  for_each_perm(4, [&](const Perm& a) {
    for_each_perm(4, [&](const Perm& b) {
      if (contains(a, b) && contains(b, a)) REQUIRE(a == b);
    });
  });
  std::mt19937 rng(3);
  auto random_perm = [&](int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Perm(v);
  };
  int chains = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    Perm a = random_perm(3), b = random_perm(5), c = random_perm(8);
    if (contains(a, b) && contains(b, c)) {
      ++chains;
      REQUIRE(contains(a, c));
    }
  }
  CHECK(chains > 0);
}

TEST_CASE("an embedding induces a subgraph") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> t(8);
    std::iota(t.begin(), t.end(), 1);
    std::shuffle(t.begin(), t.end(), rng);
    Perm target(t);
    for_each_perm(4, [&](const Perm& s) {
      auto emb = find_embedding(s, target);
      if (!emb) return;
      auto gs = perm_graph(s), gt = perm_graph(target);
      for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) REQUIRE(gs.adjacent(i, j) == gt.adjacent((*emb)[i - 1] + 1, (*emb)[j - 1] + 1));
    });
  }
}

TEST_CASE("text form") {
  CHECK(parse_perm("4 7 9 8 3 2 1 5 6") == P("479832156"));
  CHECK(parse_perm("10,1,2,3,4,5,6,7,8,9").size() == 10);
  CHECK_THROWS_AS(parse_perm("122"), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm("1 3"), std::invalid_argument);
}

}
