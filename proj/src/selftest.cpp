#include "permclass/cli.hpp"

#include "permclass/classify.hpp"
#include "permclass/encodings.hpp"
#include "permclass/grid.hpp"
#include "permclass/perm_class.hpp"
#include "permclass/rectangles.hpp"
#include "permclass/witness.hpp"

#include <random>
#include <stdexcept>

namespace permclass {

void SelftestReport::check(bool ok, std::string what) {
  if (ok) {
    ++passed;
  } else {
    ++failed;
    failures.push_back(std::move(what));
  }
}

namespace {

void perm_checks(SelftestReport& r) {
  for (int n = 2; n <= 6; ++n)
    for_each_perm(n, [&](const Perm& p) {
      auto d = simple_decomposition(p);
      r.check(inflate(d.skeleton, d.components) == p, "decomposition round trip " + p.str());
      r.check(is_simple(d.skeleton) || d.skeleton.size() == 2, "skeleton simple " + p.str());
      r.check(is_sum_indecomposable(p) == is_sum_indecomposable_by_path(p), "indecomposability tests agree " + p.str());
      r.check(parse_perm(p.str()) == p, "text round trip " + p.str());
      for (const auto& s : Symmetry::all())
        r.check(s.inverse_element().apply(s.apply(p)) == p, "symmetry inverse " + s.name());
    });
}

void class_checks(SelftestReport& r) {
  for (auto basis : {std::vector<Perm>{Perm{3, 2, 1}}, std::vector<Perm>{Perm{2, 3, 1}, Perm{1, 3, 2}},
                     std::vector<Perm>{Perm{4, 3, 2, 1}, Perm{2, 1, 4, 3}}}) {
    auto c = FiniteBasisClass::normalize(basis);
    auto e = enumerate(c, 7);
    for (int n = 0; n <= 7; ++n) {
      long long brute = 0;
      for_each_perm(n, [&](const Perm& p) { brute += c.contains(p) ? 1 : 0; });
      r.check(e.counts[n] == brute, c.str() + " count at n=" + std::to_string(n));
    }
  }
  auto e = enumerate(FiniteBasisClass::normalize({Perm{3, 2, 1}}), 8);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; a + b <= 8; ++b)
      r.check(e.counts[a + b] >= e.counts[a] * e.counts[b], "supermultiplicative Av(321)");
}

void gf_checks(SelftestReport& r) {
  struct Case {
    Perm gen;
    Poly f;
  };
  for (const auto& cs : {Case{Perm{1, 4, 3, 2}, Poly{0, 1, 1, 1}}, Case{Perm{2, 5, 1, 3, 6, 4}, Poly{0, 1, 1, 2, 3, 3, 1}}}) {
    auto direct = sum_closure_counts({cs.gen}, 12);
    auto via_gf = series(sum_completion_gf(cs.f), 12);
    r.check(direct == via_gf, "sum completion of " + cs.gen.str());
    auto ind = sum_indecomposables_in(closure({cs.gen}), cs.gen.size());
    for (int n = 1; n <= cs.gen.size(); ++n)
      r.check(ind[n] == cs.f.coeff(n), "indecomposables of " + cs.gen.str());
  }
  auto g = pringsheim_growth(RationalGF(Poly{1, -1}, Poly{1, -2, 0, -1}));
  r.check(compare(g, kappa()) == 0, "oscillation class growth is kappa");
}

void grid_checks(SelftestReport& r) {
  for (const auto& m : {parallel_matrix(), hook_matrix(), three_one_matrix()}) {
    auto e = enumerate_gridded(m, 6, true);
    for (int n = 0; n <= 6; ++n) {
      BigInt total = 0;
      for (const auto& gp : e.members[n]) r.check(is_valid_gridding(gp.perm, m, gp.gridding), "gridding sound");
      std::set<Perm> plain;
      for (const auto& gp : e.members[n]) plain.insert(gp.perm);
      for (const auto& p : plain) total += static_cast<long>(all_griddings(p, m).size());
      r.check(total == e.gridded[n], "gridded count equals summed griddings at n=" + std::to_string(n));
      r.check(BigInt(plain.size()) == e.plain[n], "plain count at n=" + std::to_string(n));
    }
  }
}

void encode_checks(SelftestReport& r) {
  struct Kind {
    GridMatrix m;
    Word (*enc)(const Perm&, const Gridding&);
    GriddedPerm (*dec)(const Word&);
    WeightedLanguage lang;
  };
  for (const auto& k : {Kind{parallel_matrix(), encode_parallel, decode_parallel, parallel_language()},
                        Kind{hook_matrix(), encode_hook, decode_hook, hook_language()},
                        Kind{three_one_matrix(), encode_31, decode_31, three_one_language()}}) {
    for (int n = 0; n <= 7; ++n)
      for (const auto& w : words_of_weight(k.lang, n)) {
        auto gp = k.dec(w);
        r.check(is_valid_gridding(gp.perm, k.m, gp.gridding), "decoded gridding valid " + w);
        r.check(k.enc(gp.perm, gp.gridding) == w, "round trip " + w);
      }
  }
}

void witness_checks(SelftestReport& r) {
  for (int k = 1; k <= 9; ++k)
    for (const auto& p : increasing_oscillations(k)) {
      r.check(in_O(p), "oscillation in O " + p.str());
      r.check(contains(p, increasing_oscillating_prefix(k + 2)), "oscillation embeds in the prefix " + p.str());
    }
  std::vector<Perm> u;
  for (int m = 1; m <= 6; ++m) u.push_back(u_antichain(m));
  r.check(is_antichain(u), "u_1..u_6 antichain");
  r.check(is_antichain(basis_WO()), "W(O) basis is an antichain");
}

void families_checks(SelftestReport& r) {
  auto rates = list_subkappa_rates(6, 6);
  for (std::size_t i = 1; i < rates.size(); ++i)
    r.check(compare(rates[i - 1].value, rates[i].value) < 0, "strictly sorted at " + std::to_string(i));
  r.check(compare(family_value(Family::V, 1, 1), nu()) == 0, "V(1,1) is nu");
  auto rep = accumulation_scan(6, 6);
  r.check(rep.v_monotone && rep.vi_monotone && rep.below_limits, "accumulation monotone");
}

void decide_checks(SelftestReport& r) {
  struct Case {
    std::vector<Perm> basis;
    bool below;
  };
  for (const auto& c : {Case{{Perm{2, 1}}, true}, Case{{Perm{3, 2, 1}, Perm{2, 3, 4, 1}, Perm{3, 4, 1, 2}, Perm{4, 1, 2, 3}}, false},
                        Case{{Perm{1, 2, 3}}, false}})
    for (const auto& s : Symmetry::all()) {
      std::vector<Perm> b;
      for (const auto& p : c.basis) b.push_back(s.apply(p));
      r.check(decide_sub_kappa(FiniteBasisClass::normalize(b)).below_kappa == c.below,
              "verdict under " + s.name());
    }
}

void rect_checks(SelftestReport& r) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(0, 40), count(1, 10);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rect> rs;
    int n = count(rng);
    while (static_cast<int>(rs.size()) < n) {
      int a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
      if (a == c || b == d) continue;
      rs.emplace_back(std::min(a, c), std::min(b, d), std::max(a, c), std::max(b, d));
    }
    auto lines = slice_rectangles(rs);
    for (const auto& rect : rs)
      r.check(std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return slices(l, rect); }),
              "every rectangle sliced, trial " + std::to_string(trial));
    r.check(static_cast<long long>(lines.size()) <= slicing_bound(independence_number(rs)),
            "line budget, trial " + std::to_string(trial));
  }
}

}  // namespace

SelftestReport run_selftest(std::string_view module) {
  SelftestReport r;
  if (module == "perm") perm_checks(r);
  else if (module == "class") class_checks(r);
  else if (module == "gf") gf_checks(r);
  else if (module == "grid") grid_checks(r);
  else if (module == "encode") encode_checks(r);
  else if (module == "witness") witness_checks(r);
  else if (module == "families") families_checks(r);
  else if (module == "decide-kappa") decide_checks(r);
  else if (module == "rect") rect_checks(r);
  else throw std::invalid_argument("no self checks for '" + std::string(module) + "'");
  return r;
}

}  // namespace permclass
