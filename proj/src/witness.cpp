#include "permclass/witness.hpp"

#include "permclass/perm_class.hpp"

#include <algorithm>
#include <stdexcept>

namespace permclass {

Perm increasing_oscillating_prefix(int n) {
  if (n < 1) throw std::invalid_argument("oscillating prefix needs n >= 1");
  std::vector<int> seq;
  for (int k = 1; static_cast<int>(seq.size()) < n; ++k) {
    seq.push_back(2 * k + 2);
    if (static_cast<int>(seq.size()) < n) seq.push_back(2 * k - 1);
  }
  return Perm::standardize(seq);
}

std::vector<Perm> increasing_oscillations(int k) {
  if (k < 1) throw std::invalid_argument("oscillation length must be >= 1");
  // Induced subpaths of the (path) inversion graph of the sequence; a
  // prefix two entries longer than k holds subpaths of both parities.
  Perm pre = increasing_oscillating_prefix(k + 2);
  int n = pre.size();
  std::vector<Perm> out;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> seq;
    for (int i = 0; i < n; ++i)
      if (pick[i]) seq.push_back(pre.values()[i]);
    Perm q = Perm::standardize(seq);
    if (is_sum_indecomposable(q)) out.push_back(q);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Perm> decreasing_oscillations(int k) {
  std::vector<Perm> out;
  for (const auto& p : increasing_oscillations(k)) out.push_back(reverse(p));
  std::sort(out.begin(), out.end());
  return out;
}

Perm oscillation(const OscillationSpec& spec) {
  auto list = spec.direction == OscDirection::Increasing ? increasing_oscillations(spec.length)
                                                          : decreasing_oscillations(spec.length);
  if (spec.variant < 0 || spec.variant >= static_cast<int>(list.size()))
    throw std::invalid_argument("no such oscillation variant");
  return list[spec.variant];
}

namespace {

const std::vector<Perm>& inc_osc_basis() {
  static const std::vector<Perm> b{Perm{3, 2, 1}, Perm{2, 3, 4, 1}, Perm{3, 4, 1, 2}, Perm{4, 1, 2, 3}};
  return b;
}

}  // namespace

bool in_O(const Perm& p) { return avoids_all(p, inc_osc_basis()) || avoids_all(reverse(p), inc_osc_basis()); }

bool in_O_k(const Perm& p, int k) {
  for (int len = std::max(1, p.size()); len <= k; ++len) {
    for (const auto& q : increasing_oscillations(len))
      if (contains(p, q) || contains(p, reverse(q))) return true;
  }
  return p.empty() && k >= 0;
}

const std::vector<Perm>& basis_WO() {
  static const std::vector<Perm> basis = [] {
    std::vector<Perm> seeds{parse_perm("25314"),  parse_perm("41352"),  parse_perm("246153"),
                            parse_perm("251364"), parse_perm("314625"), parse_perm("351624"),
                            parse_perm("415263")};
    std::vector<Perm> out;
    for (const auto& s : seeds)
      for (const auto& q : symmetry_orbit(s)) out.push_back(q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }();
  return basis;
}

bool in_WO(const Perm& p) { return avoids_all(p, basis_WO()); }

Perm u_antichain(int m) {
  if (m < 1) throw std::invalid_argument("u_m needs m >= 1");
  std::vector<int> v{2, 3, 5, 1};
  for (int j = 2; j <= m; ++j) {
    v.push_back(2 * j + 3);
    v.push_back(2 * j);
  }
  v.push_back(2 * m + 4);
  v.push_back(2 * m + 5);
  v.push_back(2 * m + 2);
  return Perm(std::move(v));
}

Perm alternation(const AlternationSpec& spec) {
  int m = spec.m;
  if (m < 1) throw std::invalid_argument("alternation size must be >= 1");
  std::vector<int> v;
  switch (spec.family) {
    case AlternationFamily::Parallel:
      for (int i = 1; i <= m; ++i) v.push_back(2 * i - 1);
      for (int i = 1; i <= m; ++i) v.push_back(2 * i);
      break;
    case AlternationFamily::Wedge:
      for (int i = 1; i <= m; ++i) {
        v.push_back(i);
        v.push_back(2 * m + 1 - i);
      }
      break;
    case AlternationFamily::ThreeOne:
      // m increasing 21-blocks on the left, m increasing separators on the right
      for (int i = 1; i <= m; ++i) {
        v.push_back(3 * i - 1);
        v.push_back(3 * i - 2);
      }
      for (int i = 1; i <= m; ++i) v.push_back(3 * i);
      break;
    case AlternationFamily::LinearTriple:
      for (int part = 0; part < 3; ++part)
        for (int i = 1; i <= m; ++i) v.push_back(3 * i - 2 + part);
      break;
    case AlternationFamily::HookTriple:
      for (int i = 1; i <= m; ++i) {
        v.push_back(2 * m + i);
        v.push_back(2 * i - 1);
      }
      for (int i = 1; i <= m; ++i) v.push_back(2 * i);
      break;
    case AlternationFamily::UAntichain:
      return spec.symmetry.apply(u_antichain(m));
  }
  return spec.symmetry.apply(Perm(std::move(v)));
}

namespace {

bool monotone(const std::vector<int>& v, bool increasing) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if ((v[i] > v[i - 1]) != increasing) return false;
  return true;
}

// Split by a vertical line into halves of (nearly) equal size; both must
// be monotone the same way and strictly alternate in value order.
bool vertical_parallel(const Perm& p) {
  int n = p.size();
  if (n < 4) return false;
  for (int h = n / 2; h <= (n + 1) / 2; ++h) {
    std::vector<int> left(p.values().begin(), p.values().begin() + h);
    std::vector<int> right(p.values().begin() + h, p.values().end());
    for (bool inc : {true, false}) {
      if (!monotone(left, inc) || !monotone(right, inc)) continue;
      std::vector<int> side(n + 1);
      for (int x : left) side[x] = 0;
      for (int x : right) side[x] = 1;
      bool alternating = true;
      for (int v = 2; v <= n; ++v)
        if (side[v] == side[v - 1]) alternating = false;
      if (alternating) return true;
    }
  }
  return false;
}

}  // namespace

bool is_parallel_alternation(const Perm& p) { return vertical_parallel(p) || vertical_parallel(inverse(p)); }

std::vector<std::string> witness_family_names() {
  return {"par-alt", "wedge-alt", "31-alt", "linear-triple", "hook-triple", "u-antichain", "osc-inc", "osc-dec"};
}

Perm witness_by_name(std::string_view family, int m, const Symmetry& sym) {
  AlternationSpec spec;
  spec.m = m;
  spec.symmetry = sym;
  if (family == "par-alt") spec.family = AlternationFamily::Parallel;
  else if (family == "wedge-alt") spec.family = AlternationFamily::Wedge;
  else if (family == "31-alt") spec.family = AlternationFamily::ThreeOne;
  else if (family == "linear-triple") spec.family = AlternationFamily::LinearTriple;
  else if (family == "hook-triple") spec.family = AlternationFamily::HookTriple;
  else if (family == "u-antichain") spec.family = AlternationFamily::UAntichain;
  else if (family == "osc-inc" || family == "osc-dec") {
    OscillationSpec os;
    os.direction = family == "osc-inc" ? OscDirection::Increasing : OscDirection::Decreasing;
    os.length = m;
    return sym.apply(oscillation(os));
  } else {
    throw std::invalid_argument("unknown witness family '" + std::string(family) + "'");
  }
  return alternation(spec);
}

}  // namespace permclass
