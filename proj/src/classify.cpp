#include "permclass/classify.hpp"

#include "permclass/witness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permclass {

AlgebraicNumber kappa() {
  static const AlgebraicNumber k = largest_positive_root(Poly{1, 0, 2, -1});
  return k;
}

AlgebraicNumber nu() {
  static const AlgebraicNumber v = largest_positive_root(Poly{1, 2, 1, 1, -1});
  return v;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Zero: return "0";
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::V: return "V";
    case Family::VI: return "VI";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::Zero, Family::I, Family::II, Family::III, Family::IV, Family::V, Family::VI})
    if (family_name(f) == s) return f;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

Poly family_poly(Family f, int k, int ell) {
  auto X = [](int e) { return Poly::monomial(1, e); };
  if (f != Family::Zero && f != Family::II && k < (f == Family::I ? 1 : 0))
    throw std::invalid_argument("family " + family_name(f) + " needs k >= " + (f == Family::I ? "1" : "0"));
  switch (f) {
    case Family::Zero:
      return X(1);
    case Family::I:
      return Poly::constant(1) - X(k).scaled(2) + X(k + 1);
    case Family::II:
      return Poly{2, -1};
    case Family::III:
      return Poly::constant(3) - X(1) - X(k + 1) + X(k + 4) - X(k + 3).scaled(2);
    case Family::IV:
      return Poly{1, 2, -1} - X(k + 2) + X(k + 5) - X(k + 4).scaled(2);
    case Family::V:
      if (ell < 1) throw std::invalid_argument("family V needs ell >= 1");
      return Poly::constant(1) + X(ell) - X(k + ell) - X(k + ell + 2).scaled(2) + X(k + ell + 3);
    case Family::VI:
      return Poly::constant(1) - X(k) - X(k + 2).scaled(2) + X(k + 3);
  }
  throw std::invalid_argument("unknown family");
}

AlgebraicNumber family_value(Family f, int k, int ell) {
  if (f == Family::Zero) return AlgebraicNumber::rational(0);
  return largest_positive_root(family_poly(f, k, ell));
}

std::string SequenceSpec::str() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (std::size_t i = 0; i < prefix.size();) {
    std::size_t j = i;
    while (j < prefix.size() && prefix[j] == prefix[i]) ++j;
    std::size_t run = j - i;
    if (run >= 3) {
      os << (first ? "" : ",") << prefix[i] << 'x' << run;
      first = false;
    } else {
      for (std::size_t t = i; t < j; ++t, first = false) os << (first ? "" : ",") << prefix[t];
    }
    i = j;
  }
  if (tail) os << (first ? "" : ",") << *tail << "xinf";
  os << ')';
  return os.str();
}

SequenceSpec parse_sequence(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 2) == "×") {
      s += 'x';
      ++i;
    } else if (text.substr(i, 3) == "∞") {
      s += "inf";
      i += 2;
    } else if (text[i] != '(' && text[i] != ')' && text[i] != ' ') {
      s += text[i];
    }
  }
  SequenceSpec spec;
  if (s.empty()) return spec;
  std::stringstream ss(s);
  std::string tok;
  auto to_int = [&](const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad sequence entry '" + t + "' in " + std::string(text));
    return std::stoi(t);
  };
  while (std::getline(ss, tok, ',')) {
    if (spec.tail) throw std::invalid_argument("an infinite run must come last: " + std::string(text));
    auto x = tok.find('x');
    if (x == std::string::npos) {
      spec.prefix.push_back(to_int(tok));
      continue;
    }
    int v = to_int(tok.substr(0, x));
    std::string reps = tok.substr(x + 1);
    if (reps == "inf") {
      spec.tail = v;
    } else {
      int r = to_int(reps);
      spec.prefix.insert(spec.prefix.end(), r, v);
    }
  }
  return spec;
}

RationalGF seq_to_gf(const SequenceSpec& spec) {
  std::vector<BigInt> s(spec.prefix.size() + 1, 0);
  for (std::size_t i = 0; i < spec.prefix.size(); ++i) s[i + 1] = spec.prefix[i];
  Poly P(std::move(s));
  Poly one = Poly::constant(1);
  if (!spec.tail) return RationalGF(one, one - P);
  // 1/(1 - P - v x^(p+1)/(1-x))
  Poly one_minus_x = Poly{1, -1};
  int p = static_cast<int>(spec.prefix.size());
  return RationalGF(one_minus_x, one_minus_x * (one - P) - Poly::monomial(*spec.tail, p + 1));
}

bool is_large(const SequenceSpec& spec) { return compare(pringsheim_growth(seq_to_gf(spec)), kappa()) >= 0; }

std::vector<GrowthRateEntry> list_subkappa_rates(int max_k, int max_ell) {
  if (max_k < 1 || max_ell < 1) throw std::invalid_argument("bounds must be at least 1");
  std::vector<GrowthRateEntry> all;
  auto add = [&](Family f, int k, int ell) {
    Poly p = family_poly(f, std::max(k, 0), std::max(ell, 0));
    all.push_back({f, k, ell, p, family_value(f, std::max(k, 0), std::max(ell, 0))});
  };
  add(Family::Zero, -1, -1);
  for (int k = 1; k <= max_k; ++k) add(Family::I, k, -1);
  add(Family::II, -1, -1);
  for (int k = 0; k <= max_k; ++k) add(Family::III, k, -1);
  for (int k = 0; k <= max_k; ++k) add(Family::IV, k, -1);
  for (int k = 0; k <= max_k; ++k)
    for (int ell = 1; ell <= max_ell; ++ell) add(Family::V, k, ell);
  for (int k = 0; k <= max_k; ++k) add(Family::VI, k, -1);

  // narrow intervals first so most comparisons need no further work
  Rational eps(1, BigInt(1) << 40);
  for (auto& e : all) e.value = e.value.refined(eps);
  AlgebraicNumber K = kappa();
  std::erase_if(all, [&](const GrowthRateEntry& e) { return compare(e.value, K) >= 0; });
  std::stable_sort(all.begin(), all.end(),
                   [](const GrowthRateEntry& a, const GrowthRateEntry& b) { return compare(a.value, b.value) < 0; });
  std::vector<GrowthRateEntry> out;
  for (auto& e : all)
    if (out.empty() || compare(out.back().value, e.value) != 0) out.push_back(std::move(e));
  return out;
}

namespace {

GridMatrix row_matrix(std::vector<CellClass> cells) {
  GridMatrix m(static_cast<int>(cells.size()), 1);
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) m.at(i + 1, 1) = cells[i];
  return m;
}

GridMatrix hook(CellClass top, CellClass bottom_left, CellClass bottom_right) {
  GridMatrix m(2, 2);
  m.at(1, 2) = std::move(top);
  m.at(1, 1) = std::move(bottom_left);
  m.at(2, 1) = std::move(bottom_right);
  return m;
}

}  // namespace

std::vector<NamedGrid> alternation_grid_classes() {
  auto I = CellClass::inc(), D = CellClass::dec();
  auto S = CellClass::sum_closure({Perm{2, 1}});
  std::vector<NamedGrid> seeds{
      {"(3,1)", row_matrix({S, I})},
      {"(3,1)", row_matrix({S, D})},
      {"linear triple", row_matrix({I, I, I})},
      {"linear triple", row_matrix({I, I, D})},
      {"linear triple", row_matrix({I, D, I})},
      {"linear triple", row_matrix({I, D, D})},
      {"hook triple", hook(I, I, I)},
      {"hook triple", hook(I, I, D)},
      {"hook triple", hook(D, I, D)},
      {"hook triple", hook(I, D, I)},
      {"hook triple", hook(I, D, D)},
      {"hook triple", hook(D, D, D)},
  };
  std::vector<NamedGrid> out;
  for (const auto& seed : seeds)
    for (const auto& s : Symmetry::all()) {
      GridMatrix m = seed.matrix.transformed(s);
      bool seen = std::any_of(out.begin(), out.end(), [&](const NamedGrid& g) { return g.matrix == m; });
      if (!seen) out.push_back({seed.label, std::move(m)});
    }
  return out;
}

KappaVerdict decide_sub_kappa(const FiniteBasisClass& c) {
  if (c.is_all_perms()) throw std::invalid_argument("the class of all permutations is not small");
  KappaVerdict v;
  auto record = [&](std::string check, bool passed, std::string detail) {
    v.checks.push_back({check, passed});
    if (!passed) v.witnesses.push_back({std::move(check), std::move(detail)});
  };

  auto grid = is_D_griddable(ClassSpec{c}, basis_WO());
  record("W(O)-griddable", grid.griddable,
         grid.griddable ? ""
                        : std::string(*grid.direction == SumDirection::Sum ? "sums" : "skew sums") +
                              " of " + grid.beta->str() + " of every length");

  const std::vector<Perm> osc_basis{Perm{3, 2, 1}, Perm{2, 3, 4, 1}, Perm{3, 4, 1, 2}, Perm{4, 1, 2, 3}};
  std::vector<Perm> rev_basis;
  for (const auto& b : osc_basis) rev_basis.push_back(reverse(b));
  auto some_in = [&](const std::vector<Perm>& cls) {
    return std::any_of(c.basis().begin(), c.basis().end(), [&](const Perm& b) { return avoids_all(b, cls); });
  };
  record("bounded increasing oscillations", some_in(osc_basis), "contains all increasing oscillations");
  record("bounded decreasing oscillations", some_in(rev_basis), "contains all decreasing oscillations");

  for (const auto& g : alternation_grid_classes()) {
    bool blocked = std::any_of(c.basis().begin(), c.basis().end(),
                               [&](const Perm& b) { return find_gridding(b, g.matrix).has_value(); });
    record("excludes " + g.label + " grid class " + g.matrix.to_inline(), blocked,
           "contains Grid(" + g.matrix.to_inline() + ")");
  }
  v.below_kappa = v.witnesses.empty();
  return v;
}

AccumulationReport accumulation_scan(int k_max, int ell_max) {
  if (k_max < 2 || ell_max < 2) throw std::invalid_argument("bounds must be at least 2");
  AccumulationReport rep;
  AlgebraicNumber K = kappa();
  auto push = [&](std::string label, const AlgebraicNumber& val, const AlgebraicNumber& limit,
                  const std::optional<AlgebraicNumber>& prev, bool& monotone) {
    bool inc = !prev || compare(*prev, val) < 0;
    if (!inc) monotone = false;
    if (compare(val, limit) >= 0) rep.below_limits = false;
    rep.rows.push_back({std::move(label), val, limit, inc, limit.approx() - val.approx()});
  };
  for (int k = 1; k <= k_max; ++k) {
    AlgebraicNumber limit = family_value(Family::VI, k);
    std::optional<AlgebraicNumber> prev;
    for (int ell = 1; ell <= ell_max; ++ell) {
      AlgebraicNumber val = family_value(Family::V, k, ell);
      push("V(" + std::to_string(k) + "," + std::to_string(ell) + ")", val, limit, prev, rep.v_monotone);
      prev = val;
    }
  }
  std::optional<AlgebraicNumber> prev;
  for (int k = 1; k <= k_max; ++k) {
    AlgebraicNumber val = family_value(Family::VI, k);
    push("VI(" + std::to_string(k) + ")", val, K, prev, rep.vi_monotone);
    prev = val;
  }
  return rep;
}

}  // namespace permclass
