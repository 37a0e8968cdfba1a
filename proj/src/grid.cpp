#include "permclass/grid.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace permclass {

// ---------------------------------------------------------------------------
// cells

CellClass CellClass::avoiding(std::vector<Perm> basis) {
  std::sort(basis.begin(), basis.end());
  return {Kind::Basis, std::move(basis)};
}

CellClass CellClass::sum_closure(std::vector<Perm> gens) {
  std::sort(gens.begin(), gens.end());
  return {Kind::SumClosure, std::move(gens)};
}

CellClass CellClass::skew_closure(std::vector<Perm> gens) {
  std::sort(gens.begin(), gens.end());
  return {Kind::SkewClosure, std::move(gens)};
}

namespace {

bool is_monotone(const Perm& p, bool increasing) {
  for (int i = 2; i <= p.size(); ++i)
    if ((p(i) > p(i - 1)) != increasing) return false;
  return true;
}

std::vector<Perm> map_perms(const std::vector<Perm>& ps, const Symmetry& s) {
  std::vector<Perm> out;
  for (const auto& p : ps) out.push_back(s.apply(p));
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string joined(const std::vector<Perm>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ";";
    out += ps[i].str();
  }
  return out;
}

}  // namespace

bool CellClass::contains(const Perm& p) const {
  switch (kind) {
    case Kind::Empty:
      return p.empty();
    case Kind::Inc:
      return is_monotone(p, true);
    case Kind::Dec:
      return is_monotone(p, false);
    case Kind::Point:
      return p.size() <= 1;
    case Kind::Basis:
      return avoids_all(p, perms);
    case Kind::SumClosure:
      for (const auto& comp : sum_components(p))
        if (std::none_of(perms.begin(), perms.end(), [&](const Perm& g) { return permclass::contains(comp, g); }))
          return false;
      return true;
    case Kind::SkewClosure:
      for (const auto& comp : skew_components(p))
        if (std::none_of(perms.begin(), perms.end(), [&](const Perm& g) { return permclass::contains(comp, g); }))
          return false;
      return true;
  }
  return false;
}

CellClass CellClass::transformed(const Symmetry& s) const {
  bool keeps_sums = s.apply(Perm{1, 2}) == Perm{1, 2};
  switch (kind) {
    case Kind::Empty:
    case Kind::Point:
      return *this;
    case Kind::Inc:
      return keeps_sums ? inc() : dec();
    case Kind::Dec:
      return keeps_sums ? dec() : inc();
    case Kind::Basis:
      return avoiding(map_perms(perms, s));
    case Kind::SumClosure:
      return keeps_sums ? sum_closure(map_perms(perms, s)) : skew_closure(map_perms(perms, s));
    case Kind::SkewClosure:
      return keeps_sums ? skew_closure(map_perms(perms, s)) : sum_closure(map_perms(perms, s));
  }
  return *this;
}

std::string CellClass::token() const {
  switch (kind) {
    case Kind::Empty: return "0";
    case Kind::Inc: return "inc";
    case Kind::Dec: return "dec";
    case Kind::Point: return "pt";
    case Kind::Basis: return "av(" + joined(perms) + ")";
    case Kind::SumClosure: return "sumcl(" + joined(perms) + ")";
    case Kind::SkewClosure: return "skewcl(" + joined(perms) + ")";
  }
  return "?";
}

CellClass parse_cell(std::string_view token) {
  std::string t = trim(token);
  if (t == "0") return CellClass::empty();
  if (t == "inc") return CellClass::inc();
  if (t == "dec") return CellClass::dec();
  if (t == "pt") return CellClass::point();
  auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')') throw std::invalid_argument("bad cell token '" + t + "'");
  std::string head = t.substr(0, open);
  std::string body = t.substr(open + 1, t.size() - open - 2);
  std::vector<Perm> perms;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (trim(item).empty()) continue;
    perms.push_back(parse_perm(item));
  }
  if (perms.empty()) throw std::invalid_argument("cell '" + t + "' lists no permutations");
  if (head == "av") return CellClass::avoiding(std::move(perms));
  if (head == "sumcl") return CellClass::sum_closure(std::move(perms));
  if (head == "skewcl") return CellClass::skew_closure(std::move(perms));
  throw std::invalid_argument("bad cell token '" + t + "'");
}

// ---------------------------------------------------------------------------
// matrices

GridMatrix::GridMatrix(int width, int height) : t_(width), u_(height), cells_(width * height) {
  if (width < 1 || height < 1) throw std::invalid_argument("grid matrix needs positive dimensions");
}

int GridMatrix::index(int col, int row) const {
  if (col < 1 || col > t_ || row < 1 || row > u_) throw std::out_of_range("cell outside the matrix");
  return (col - 1) * u_ + (row - 1);
}

GridMatrix GridMatrix::transformed(const Symmetry& s) const {
  int T = s.inv ? u_ : t_, U = s.inv ? t_ : u_;
  GridMatrix out(T, U);
  for (int c = 1; c <= t_; ++c)
    for (int r = 1; r <= u_; ++r) {
      int nc = s.inv ? r : c, nr = s.inv ? c : r;
      if (s.rev) nc = T + 1 - nc;
      if (s.comp) nr = U + 1 - nr;
      out.at(nc, nr) = at(c, r).transformed(s);
    }
  return out;
}

std::string GridMatrix::to_text() const {
  std::string out;
  for (int r = u_; r >= 1; --r) {
    for (int c = 1; c <= t_; ++c) {
      if (c > 1) out += ", ";
      out += at(c, r).token();
    }
    out += "\n";
  }
  return out;
}

std::string GridMatrix::to_inline() const {
  std::string out = to_text();
  out.pop_back();
  for (std::size_t i = 0; (i = out.find('\n', i)) != std::string::npos;) out.replace(i, 1, " / ");
  return out;
}

GridMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<CellClass>> rows;
  // a top-level '/' also separates rows, for one-line matrices
  std::string flat(text);
  int level = 0;
  for (char& ch : flat) {
    if (ch == '(') ++level;
    if (ch == ')') --level;
    if (ch == '/' && level == 0) ch = '\n';
  }
  std::stringstream in{flat};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::vector<CellClass> cells;
    int depth = 0;
    std::string cur;
    for (char ch : line) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ',' && depth == 0) {
        cells.push_back(parse_cell(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    cells.push_back(parse_cell(cur));
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  int t = static_cast<int>(rows.front().size()), u = static_cast<int>(rows.size());
  GridMatrix m(t, u);
  for (int i = 0; i < u; ++i) {
    if (static_cast<int>(rows[i].size()) != t) throw std::invalid_argument("ragged matrix rows");
    for (int c = 1; c <= t; ++c) m.at(c, u - i) = rows[i][c - 1];
  }
  return m;
}

// ---------------------------------------------------------------------------
// griddings

Perm cell_pattern(const Perm& p, const Gridding& g, int col, int row) {
  return restrict(p, {g.cols[col - 1], g.cols[col] - 1}, {g.rows[row - 1], g.rows[row] - 1});
}

bool is_valid_gridding(const Perm& p, const GridMatrix& m, const Gridding& g) {
  int n = p.size();
  auto check_divs = [n](const std::vector<int>& d, int k) {
    if (static_cast<int>(d.size()) != k + 1 || d.front() != 1 || d.back() != n + 1) return false;
    return std::is_sorted(d.begin(), d.end());
  };
  if (!check_divs(g.cols, m.width()) || !check_divs(g.rows, m.height())) return false;
  for (int c = 1; c <= m.width(); ++c)
    for (int r = 1; r <= m.height(); ++r)
      if (!m.at(c, r).contains(cell_pattern(p, g, c, r))) return false;
  return true;
}

namespace {

struct GriddingSearch {
  const Perm& p;
  const GridMatrix& m;
  bool want_all;
  std::vector<Gridding> found;
  Gridding g;

  GriddingSearch(const Perm& perm, const GridMatrix& mat, bool all) : p(perm), m(mat), want_all(all) {}

  bool row_ok(int row) const {
    for (int c = 1; c <= m.width(); ++c)
      if (!m.at(c, row).contains(cell_pattern(p, g, c, row))) return false;
    return true;
  }

  // returns true to stop the search
  bool rows_from(int row) {
    int n = p.size(), u = m.height();
    if (row == u) {
      g.rows[u] = n + 1;
      if (!row_ok(u)) return false;
      found.push_back(g);
      return !want_all;
    }
    for (int r = g.rows[row - 1]; r <= n + 1; ++r) {
      g.rows[row] = r;
      if (row_ok(row) && rows_from(row + 1)) return true;
    }
    return false;
  }

  bool column_empty_ok(int col) const {
    if (g.cols[col] == g.cols[col - 1]) return true;
    for (int r = 1; r <= m.height(); ++r)
      if (!m.at(col, r).is_empty()) return true;
    return false;
  }

  bool cols_from(int col) {
    int n = p.size(), t = m.width();
    if (col == t) {
      g.cols[t] = n + 1;
      if (!column_empty_ok(t)) return false;
      g.rows.assign(m.height() + 1, 1);
      return rows_from(1);
    }
    for (int c = g.cols[col - 1]; c <= n + 1; ++c) {
      g.cols[col] = c;
      if (column_empty_ok(col) && cols_from(col + 1)) return true;
    }
    return false;
  }

  void run() {
    g.cols.assign(m.width() + 1, 1);
    g.rows.assign(m.height() + 1, 1);
    cols_from(1);
  }
};

}  // namespace

std::optional<Gridding> find_gridding(const Perm& p, const GridMatrix& m) {
  GriddingSearch s(p, m, false);
  s.run();
  if (s.found.empty()) return std::nullopt;
  return s.found.front();
}

std::vector<Gridding> all_griddings(const Perm& p, const GridMatrix& m) {
  GriddingSearch s(p, m, true);
  s.run();
  return s.found;
}

namespace {

struct GriddedKey {
  std::vector<int> v, cols, rows;
  bool operator==(const GriddedKey&) const = default;
};

struct GriddedKeyHash {
  std::size_t operator()(const GriddedKey& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&](int x) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (int x : k.v) mix(x);
    mix(-1);
    for (int x : k.cols) mix(x);
    mix(-2);
    for (int x : k.rows) mix(x);
    return h;
  }
};

}  // namespace

GriddedEnumeration enumerate_gridded(const GridMatrix& m, int nmax, bool keep_members, const Budget& budget) {
  if (nmax < 0) throw std::invalid_argument("nmax must be nonnegative");
  int t = m.width(), u = m.height();
  GriddedEnumeration out;
  std::vector<GriddedKey> level{{{}, std::vector<int>(t + 1, 1), std::vector<int>(u + 1, 1)}};
  auto record = [&](const std::vector<GriddedKey>& lv) {
    out.gridded.emplace_back(lv.size());
    std::unordered_set<Perm, PermHash> distinct;
    for (const auto& k : lv) distinct.insert(Perm(k.v));
    out.plain.emplace_back(distinct.size());
    if (keep_members) {
      std::vector<GriddedPerm> ms;
      for (const auto& k : lv) ms.push_back({Perm(k.v), {k.cols, k.rows}});
      std::sort(ms.begin(), ms.end(), [](const GriddedPerm& a, const GriddedPerm& b) {
        return std::tie(a.perm, a.gridding) < std::tie(b.perm, b.gridding);
      });
      out.members.push_back(std::move(ms));
    }
  };
  record(level);
  for (int n = 1; n <= nmax; ++n) {
    std::unordered_set<GriddedKey, GriddedKeyHash> next;
    for (const auto& k : level) {
      if (budget.expired()) {
        out.complete = false;
        return out;
      }
      for (int c = 1; c <= t; ++c)
        for (int r = 1; r <= u; ++r) {
          if (m.at(c, r).is_empty()) continue;
          for (int pos = k.cols[c - 1] - 1; pos <= k.cols[c] - 1; ++pos)
            for (int val = k.rows[r - 1]; val <= k.rows[r]; ++val) {
              GriddedKey nk;
              nk.v.reserve(n);
              for (int i = 0; i < n - 1; ++i) {
                if (i == pos) nk.v.push_back(val);
                nk.v.push_back(k.v[i] >= val ? k.v[i] + 1 : k.v[i]);
              }
              if (pos == n - 1) nk.v.push_back(val);
              nk.cols = k.cols;
              nk.rows = k.rows;
              for (int j = c; j <= t; ++j) ++nk.cols[j];
              for (int j = r; j <= u; ++j) ++nk.rows[j];
              Perm q(nk.v);
              if (!m.at(c, r).contains(cell_pattern(q, {nk.cols, nk.rows}, c, r))) continue;
              next.insert(std::move(nk));
            }
        }
    }
    level.assign(next.begin(), next.end());
    record(level);
  }
  return out;
}

// ---------------------------------------------------------------------------
// matrix graphs

MatrixGraph graph_of_matrix(const GridMatrix& m) {
  MatrixGraph g;
  std::vector<std::vector<int>> id(m.width() + 1, std::vector<int>(m.height() + 1, -1));
  for (int c = 1; c <= m.width(); ++c)
    for (int r = 1; r <= m.height(); ++r)
      if (!m.at(c, r).is_empty()) {
        id[c][r] = static_cast<int>(g.vertices.size());
        g.vertices.push_back({c, r});
      }
  // consecutive nonempty cells along each row and each column
  for (int r = 1; r <= m.height(); ++r) {
    int prev = -1;
    for (int c = 1; c <= m.width(); ++c)
      if (id[c][r] >= 0) {
        if (prev >= 0) g.edges.emplace_back(prev, id[c][r]);
        prev = id[c][r];
      }
  }
  for (int c = 1; c <= m.width(); ++c) {
    int prev = -1;
    for (int r = 1; r <= m.height(); ++r)
      if (id[c][r] >= 0) {
        if (prev >= 0) g.edges.emplace_back(prev, id[c][r]);
        prev = id[c][r];
      }
  }
  return g;
}

namespace {

std::vector<int> component_labels(const MatrixGraph& g) {
  std::vector<int> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : g.edges) parent[find(a)] = find(b);
  std::vector<int> label(g.vertices.size());
  for (std::size_t i = 0; i < label.size(); ++i) label[i] = find(static_cast<int>(i));
  return label;
}

}  // namespace

std::vector<std::vector<Cell>> component_cells(const GridMatrix& m) {
  auto g = graph_of_matrix(m);
  auto label = component_labels(g);
  std::vector<std::vector<Cell>> out;
  std::vector<int> seen_label;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    auto it = std::find(seen_label.begin(), seen_label.end(), label[i]);
    if (it == seen_label.end()) {
      seen_label.push_back(label[i]);
      out.push_back({});
      it = seen_label.end() - 1;
    }
    out[it - seen_label.begin()].push_back(g.vertices[i]);
  }
  return out;
}

std::vector<GridMatrix> components(const GridMatrix& m) {
  std::vector<GridMatrix> out;
  for (const auto& cells : component_cells(m)) {
    GridMatrix r(m.width(), m.height());
    for (const auto& c : cells) r.at(c.col, c.row) = m.at(c.col, c.row);
    out.push_back(std::move(r));
  }
  return out;
}

bool is_forest(const GridMatrix& m) {
  auto g = graph_of_matrix(m);
  auto comps = component_cells(m);
  return g.edges.size() + comps.size() == g.vertices.size();
}

// ---------------------------------------------------------------------------
// griddability

bool member(const ClassSpec& c, const Perm& p) {
  return std::visit([&](const auto& cls) { return cls.contains(p); }, c);
}

std::string describe(const ClassSpec& c) {
  return std::visit([](const auto& cls) { return cls.str(); }, c);
}

bool sum_closure_contained(const Perm& beta, const ClassSpec& c) {
  if (beta.empty()) return true;
  if (const auto* fb = std::get_if<FiniteBasisClass>(&c)) {
    // an occurrence of b meets at most |b| summands
    for (const auto& b : fb->basis())
      if (contains(b, sum_power(beta, b.size()))) return false;
    return true;
  }
  if (const auto* sc = std::get_if<SumClosureClass>(&c)) return sc->contains(beta);
  // long sums are skew indecomposable, so no finite generator set holds them
  return false;
}

bool skew_closure_contained(const Perm& beta, const ClassSpec& c) {
  if (beta.empty()) return true;
  if (const auto* fb = std::get_if<FiniteBasisClass>(&c)) {
    for (const auto& b : fb->basis())
      if (contains(b, skew_power(beta, b.size()))) return false;
    return true;
  }
  if (const auto* kc = std::get_if<SkewClosureClass>(&c)) return kc->contains(beta);
  return false;
}

GriddabilityResult is_D_griddable(const ClassSpec& c, const std::vector<Perm>& d_basis) {
  for (const auto& beta : d_basis) {
    if (sum_closure_contained(beta, c)) return {false, beta, SumDirection::Sum};
    if (skew_closure_contained(beta, c)) return {false, beta, SumDirection::Skew};
  }
  return {};
}

}  // namespace permclass
