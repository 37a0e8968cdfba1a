#include "doctest.h"
#include "oracle.hpp"

#include "permclass/perm_class.hpp"
#include "permclass/witness.hpp"

using namespace permclass;

namespace {

Perm P(const char* s) { return parse_perm(s); }

bool graph_is_path(const Perm& p) {
  auto g = perm_graph(p);
  int n = p.size();
  if (static_cast<int>(g.edges().size()) != n - 1 || !g.connected()) return false;
  for (int i = 1; i <= n; ++i)
    if (g.neighbours(i).size() > 2) return false;
  return true;
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("oscillating prefix") {
  CHECK(increasing_oscillating_prefix(4) == P("3142"));
  CHECK(increasing_oscillating_prefix(1) == P("1"));
  CHECK(increasing_oscillating_prefix(6) == Perm::standardize(std::vector<int>{4, 1, 6, 3, 8, 5}));
}

TEST_CASE("oscillations are exactly the induced paths") {
  CHECK(increasing_oscillations(2) == std::vector<Perm>{P("21")});
  for (int n = 1; n <= 8; ++n) {
    std::vector<Perm> paths;
    for_each_perm(n, [&](const Perm& p) {
      if (graph_is_path(p)) paths.push_back(p);
    });
    CHECK(increasing_oscillations(n) == paths);
  }
}

TEST_CASE("indecomposables inside one oscillation") {
  auto osc = increasing_oscillations(5);
  for (const auto& p : osc) CHECK(sum_indecomposables_in(closure({p}), 5) == CountSequence{0, 1, 1, 2, 2, 1});
}

TEST_CASE("membership in O") {
  CHECK_FALSE(in_O(P("1432")));
  CHECK(in_O(P("3142")));
  CHECK(in_O(P("1")));
  for (int k = 1; k <= 7; ++k) {
    for (const auto& p : increasing_oscillations(k)) CHECK(in_O(p));
    for (const auto& p : decreasing_oscillations(k)) CHECK(in_O(p));
  }
  CHECK(in_O_k(P("21"), 3));
  CHECK_FALSE(in_O_k(P("3142"), 3));
}

TEST_CASE("W(O) basis is minimal among simple non-members of O") {
  for (const auto& b : basis_WO()) {
    CHECK(oracle::is_simple(b.values()));
    CHECK_FALSE(in_O(b));
    for (int n = 1; n < b.size(); ++n)
      for_each_perm(n, [&](const Perm& q) {
        if (is_simple(q) && contains(q, b)) REQUIRE(in_O(q));
      });
  }
}

TEST_CASE("the antichain U") {
  CHECK(u_antichain(1) == P("2351674"));
  CHECK(u_antichain(2) == P("235174896"));
  std::vector<oracle::Seq> basis{{3, 2, 1},          {3, 4, 1, 2},       {4, 1, 2, 3},       {2, 3, 4, 5, 1},
                                 {1, 3, 4, 5, 2, 6}, {1, 3, 4, 6, 2, 5}, {3, 1, 4, 5, 2, 6}, {3, 1, 4, 6, 2, 5}};
  for (int m = 1; m <= 6; ++m) CHECK(oracle::avoids_all(u_antichain(m).values(), basis));
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      if (a != b) CHECK_FALSE(oracle::contains(u_antichain(a).values(), u_antichain(b).values()));
}

TEST_CASE("alternation families") {
  CHECK(alternation({AlternationFamily::Parallel, 3, {}}) == P("135246"));
  CHECK(is_parallel_alternation(P("135246")));
  CHECK(is_parallel_alternation(P("246135")));
  CHECK(is_parallel_alternation(P("2413")));
  CHECK_FALSE(is_parallel_alternation(P("25314")));
  CHECK(witness_by_name("u-antichain", 1) == P("2351674"));
  CHECK(witness_by_name("osc-dec", 4, {}) == decreasing_oscillations(4)[0]);
  CHECK(decreasing_oscillations(4) == std::vector<Perm>{P("2413"), P("3142")});
  CHECK_THROWS_AS(witness_by_name("nonsense", 2), std::invalid_argument);
  for (const auto& name : witness_family_names())
    for (int m = 1; m <= 4; ++m) CHECK(witness_by_name(name, m).size() > 0);
}

TEST_CASE("simple permutations shrink by one or two") {
  for (int n = 4; n <= 7; ++n)
    for_each_perm(n, [&](const Perm& p) {
      if (!is_simple(p)) return;
      bool one = false, two = false;
      for_each_perm(n - 1, [&](const Perm& q) { one = one || (is_simple(q) && contains(q, p)); });
      for_each_perm(n - 2, [&](const Perm& q) { two = two || (is_simple(q) && contains(q, p)); });
      REQUIRE((one || two));
      if (!is_parallel_alternation(p)) REQUIRE(one);
    });
}

}
