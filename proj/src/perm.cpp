#include "permclass/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permclass {

namespace {

bool is_bijection(const std::vector<int>& v) {
  std::vector<char> seen(v.size() + 1, 0);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

Perm::Perm(std::vector<int> values) : v_(std::move(values)) {
  if (!is_bijection(v_)) throw std::invalid_argument("not a permutation of 1..n");
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::decreasing(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Perm(std::move(v));
}

Perm Perm::standardize(std::span<const int> seq) {
  std::vector<int> idx(seq.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  std::vector<int> v(seq.size());
  for (std::size_t r = 0; r < idx.size(); ++r) v[idx[r]] = static_cast<int>(r) + 1;
  return Perm(std::move(v));
}

std::string Perm::str() const {
  std::string out;
  bool compact = size() <= 9;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(v_[i]);
  }
  return out;
}

std::strong_ordering Perm::operator<=>(const Perm& o) const {
  if (auto c = v_.size() <=> o.v_.size(); c != 0) return c;
  return v_ <=> o.v_;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.str(); }

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.values()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h ^ p.values().size();
}

Perm parse_perm(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return Perm();
  s = s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
  std::vector<int> v;
  bool separated = s.find_first_of(" \t,") != std::string::npos;
  if (!separated) {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("bad permutation text '" + std::string(text) + "'");
      v.push_back(ch - '0');
    }
  } else {
    for (char& ch : s)
      if (ch == ',') ch = ' ';
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
      if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad permutation text '" + std::string(text) + "'");
      v.push_back(std::stoi(tok));
    }
  }
  if (!is_bijection(v)) throw std::invalid_argument("'" + std::string(text) + "' is not a permutation");
  return Perm(std::move(v));
}

// ---------------------------------------------------------------------------
// containment

namespace {

struct Matcher {
  const std::vector<int>& pat;
  const std::vector<int>& tgt;
  std::vector<int> lower, upper;  // pattern index of the nearest smaller/larger earlier value
  std::vector<int> match;

  Matcher(const std::vector<int>& p, const std::vector<int>& t) : pat(p), tgt(t) {
    int k = static_cast<int>(p.size());
    lower.assign(k, -1);
    upper.assign(k, -1);
    match.assign(k, -1);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < i; ++j) {
        if (p[j] < p[i] && (lower[i] < 0 || p[j] > p[lower[i]])) lower[i] = j;
        if (p[j] > p[i] && (upper[i] < 0 || p[j] < p[upper[i]])) upper[i] = j;
      }
    }
  }

  bool run(int i, int start) {
    int k = static_cast<int>(pat.size());
    if (i == k) return true;
    int n = static_cast<int>(tgt.size());
    int lo = lower[i] >= 0 ? tgt[match[lower[i]]] : 0;
    int hi = upper[i] >= 0 ? tgt[match[upper[i]]] : n + 1;
    // values below/above the window that still need room
    for (int pos = start; pos <= n - (k - i); ++pos) {
      int v = tgt[pos];
      if (v <= lo || v >= hi) continue;
      match[i] = pos;
      if (run(i + 1, pos + 1)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const Perm& pattern, const Perm& target) {
  if (pattern.size() > target.size()) return std::nullopt;
  Matcher m(pattern.values(), target.values());
  if (!m.run(0, 0)) return std::nullopt;
  return m.match;
}

bool contains(const Perm& pattern, const Perm& target) {
  if (pattern.size() > target.size()) return false;
  if (pattern.size() == target.size()) return pattern == target;
  Matcher m(pattern.values(), target.values());
  return m.run(0, 0);
}

Perm restrict(const Perm& p, Interval positions, Interval values) {
  std::vector<int> seq;
  for (int i = std::max(1, positions.lo); i <= std::min(p.size(), positions.hi); ++i)
    if (values.contains(p(i))) seq.push_back(p(i));
  return Perm::standardize(seq);
}

Perm delete_entry(const Perm& p, int pos) {
  std::vector<int> v;
  v.reserve(p.size());
  int removed = p.values()[pos];
  for (int i = 0; i < p.size(); ++i) {
    if (i == pos) continue;
    int x = p.values()[i];
    v.push_back(x > removed ? x - 1 : x);
  }
  return Perm(std::move(v));
}

// ---------------------------------------------------------------------------
// intervals and decomposition

std::vector<Block> proper_intervals(const Perm& p) {
  std::vector<Block> out;
  int n = p.size();
  for (int a = 1; a <= n; ++a) {
    int lo = p(a), hi = p(a);
    for (int b = a + 1; b <= n; ++b) {
      lo = std::min(lo, p(b));
      hi = std::max(hi, p(b));
      int len = b - a + 1;
      if (len >= n) break;
      if (hi - lo + 1 == len) out.push_back({{a, b}, {lo, hi}});
    }
  }
  return out;
}

bool is_simple(const Perm& p) { return proper_intervals(p).empty(); }

Perm inflate(const Perm& skeleton, std::span<const Perm> components) {
  int m = skeleton.size();
  if (static_cast<int>(components.size()) != m)
    throw std::invalid_argument("inflate: component count differs from skeleton length");
  std::vector<int> offset(m + 2, 0);  // offset by skeleton value
  std::vector<int> size_by_value(m + 1, 0);
  for (int i = 1; i <= m; ++i) {
    if (components[i - 1].empty()) throw std::invalid_argument("inflate: empty component");
    size_by_value[skeleton(i)] = components[i - 1].size();
  }
  for (int v = 1; v <= m; ++v) offset[v + 1] = offset[v] + size_by_value[v];
  std::vector<int> out;
  for (int i = 1; i <= m; ++i)
    for (int x : components[i - 1].values()) out.push_back(offset[skeleton(i)] + x);
  return Perm(std::move(out));
}

std::vector<Perm> sum_components(const Perm& p) {
  std::vector<Perm> out;
  int start = 0, mx = 0;
  for (int i = 0; i < p.size(); ++i) {
    mx = std::max(mx, p.values()[i]);
    if (mx == i + 1) {
      std::vector<int> block(p.values().begin() + start, p.values().begin() + i + 1);
      for (int& x : block) x -= start;
      out.emplace_back(std::move(block));
      start = i + 1;
    }
  }
  return out;
}

std::vector<Perm> skew_components(const Perm& p) {
  std::vector<Perm> out;
  int n = p.size(), start = 0, mn = n + 1;
  for (int i = 0; i < n; ++i) {
    mn = std::min(mn, p.values()[i]);
    if (mn == n - i) {
      std::vector<int> block(p.values().begin() + start, p.values().begin() + i + 1);
      for (int& x : block) x -= mn - 1;
      out.emplace_back(std::move(block));
      start = i + 1;
    }
  }
  return out;
}

namespace {

Perm sum_of(std::span<const Perm> parts) {
  Perm acc;
  for (const auto& q : parts) acc = direct_sum(acc, q);
  return acc;
}

Perm skew_of(std::span<const Perm> parts) {
  Perm acc;
  for (const auto& q : parts) acc = skew_sum(acc, q);
  return acc;
}

}  // namespace

SimpleDecomposition simple_decomposition(const Perm& p) {
  if (p.size() < 2) throw std::invalid_argument("simple_decomposition needs length >= 2");
  auto sc = sum_components(p);
  if (sc.size() > 1) {
    std::span<const Perm> rest(sc.begin() + 1, sc.end());
    return {Perm{1, 2}, {sc.front(), sum_of(rest)}};
  }
  auto kc = skew_components(p);
  if (kc.size() > 1) {
    std::span<const Perm> rest(kc.begin() + 1, kc.end());
    return {Perm{2, 1}, {kc.front(), skew_of(rest)}};
  }
  // Both indecomposable: the maximal proper intervals partition the entries.
  int n = p.size();
  std::vector<int> starts;
  std::vector<Perm> comps;
  int s = 1;
  while (s <= n) {
    int best = s, lo = p(s), hi = p(s);
    for (int b = s + 1; b <= n && b - s + 1 < n; ++b) {
      lo = std::min(lo, p(b));
      hi = std::max(hi, p(b));
      if (hi - lo == b - s) best = b;
    }
    starts.push_back(s);
    comps.push_back(restrict(p, {s, best}, {1, n}));
    s = best + 1;
  }
  std::vector<int> reps;
  for (int st : starts) reps.push_back(p(st));
  return {Perm::standardize(reps), std::move(comps)};
}

// ---------------------------------------------------------------------------
// permutation graph

PermGraph::PermGraph(const Perm& p) : n_(p.size()), adj_(static_cast<std::size_t>(n_) * n_, 0) {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (p(i) > p(j)) {
        edges_.emplace_back(i, j);
        adj_[(i - 1) * n_ + (j - 1)] = adj_[(j - 1) * n_ + (i - 1)] = 1;
      }
}

std::vector<int> PermGraph::neighbours(int i) const {
  std::vector<int> out;
  for (int j = 1; j <= n_; ++j)
    if (j != i && adjacent(i, j)) out.push_back(j);
  return out;
}

bool PermGraph::has_path(int from, int to) const {
  std::vector<char> seen(n_ + 1, 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == to) return true;
    for (int w = 1; w <= n_; ++w)
      if (!seen[w] && w != u && adjacent(u, w)) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

bool PermGraph::connected() const {
  if (n_ <= 1) return true;
  for (int v = 2; v <= n_; ++v)
    if (!has_path(1, v)) return false;
  return true;
}

PermGraph perm_graph(const Perm& p) { return PermGraph(p); }

bool is_sum_indecomposable(const Perm& p) {
  if (p.empty()) throw std::invalid_argument("indecomposability of the empty permutation");
  return perm_graph(p).connected();
}

bool is_sum_indecomposable_by_path(const Perm& p) {
  if (p.empty()) throw std::invalid_argument("indecomposability of the empty permutation");
  return perm_graph(p).has_path(1, p.size());
}

bool is_skew_indecomposable(const Perm& p) {
  if (p.empty()) throw std::invalid_argument("indecomposability of the empty permutation");
  return skew_components(p).size() == 1;
}

// ---------------------------------------------------------------------------
// sums and symmetries

Perm direct_sum(const Perm& a, const Perm& b) {
  std::vector<int> v = a.values();
  for (int x : b.values()) v.push_back(x + a.size());
  return Perm(std::move(v));
}

Perm skew_sum(const Perm& a, const Perm& b) {
  std::vector<int> v;
  for (int x : a.values()) v.push_back(x + b.size());
  for (int x : b.values()) v.push_back(x);
  return Perm(std::move(v));
}

Perm sum_power(const Perm& p, int k) {
  Perm acc;
  for (int i = 0; i < k; ++i) acc = direct_sum(acc, p);
  return acc;
}

Perm skew_power(const Perm& p, int k) {
  Perm acc;
  for (int i = 0; i < k; ++i) acc = skew_sum(acc, p);
  return acc;
}

Perm reverse(const Perm& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Perm(std::move(v));
}

Perm complement(const Perm& p) {
  std::vector<int> v = p.values();
  for (int& x : v) x = p.size() + 1 - x;
  return Perm(std::move(v));
}

Perm inverse(const Perm& p) {
  std::vector<int> v(p.size());
  for (int i = 1; i <= p.size(); ++i) v[p(i) - 1] = i;
  return Perm(std::move(v));
}

const std::array<Symmetry, 8>& Symmetry::all() {
  static const std::array<Symmetry, 8> table = [] {
    std::array<Symmetry, 8> t;
    for (int m = 0; m < 8; ++m) t[m] = Symmetry{(m & 4) != 0, (m & 1) != 0, (m & 2) != 0};
    return t;
  }();
  return table;
}

Perm Symmetry::apply(const Perm& p) const {
  Perm q = inv ? inverse(p) : p;
  if (rev) q = reverse(q);
  if (comp) q = complement(q);
  return q;
}

namespace {

// A permutation fixed by no nontrivial symmetry, so that group elements
// can be identified by their action on it.
const Perm& probe() {
  static const Perm q = [] {
    for (const auto& p : all_perms(5)) {
      std::vector<Perm> imgs;
      for (const auto& s : Symmetry::all()) imgs.push_back(s.apply(p));
      std::sort(imgs.begin(), imgs.end());
      if (std::unique(imgs.begin(), imgs.end()) == imgs.end()) return p;
    }
    throw std::logic_error("no asymmetric probe permutation");
  }();
  return q;
}

Symmetry identify(const Perm& image) {
  for (const auto& s : Symmetry::all())
    if (s.apply(probe()) == image) return s;
  throw std::logic_error("symmetry not identified");
}

}  // namespace

Symmetry Symmetry::then(const Symmetry& b) const { return identify(b.apply(apply(probe()))); }

Symmetry Symmetry::inverse_element() const {
  for (const auto& s : all())
    if (then(s) == identity()) return s;
  throw std::logic_error("no inverse symmetry");
}

std::string Symmetry::name() const {
  std::string out;
  auto add = [&](const char* part) {
    if (!out.empty()) out += '+';
    out += part;
  };
  if (inv) add("inverse");
  if (rev) add("reverse");
  if (comp) add("complement");
  return out.empty() ? "identity" : out;
}

Symmetry Symmetry::parse(std::string_view name) {
  std::string s(name);
  if (s == "identity" || s == "id" || s.empty()) return {};
  Symmetry out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find('+', start);
    std::string part = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (part == "inverse" || part == "i") out.inv = true;
    else if (part == "reverse" || part == "r") out.rev = true;
    else if (part == "complement" || part == "c") out.comp = true;
    else if (part == "rc") out.rev = out.comp = true;
    else throw std::invalid_argument("unknown symmetry '" + s + "'");
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<Perm> symmetry_orbit(const Perm& p) {
  std::vector<Perm> out;
  for (const auto& s : Symmetry::all()) out.push_back(s.apply(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void for_each_perm(int n, const std::function<void(const Perm&)>& f) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    f(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  for_each_perm(n, [&](const Perm& p) { out.push_back(p); });
  return out;
}

}  // namespace permclass
