#include "permclass/rectangles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace permclass {

Rect::Rect(Rational x1_, Rational y1_, Rational x2_, Rational y2_)
    : x1(std::move(x1_)), y1(std::move(y1_)), x2(std::move(x2_)), y2(std::move(y2_)) {
  if (!(x1 < x2) || !(y1 < y2)) throw std::invalid_argument("degenerate rectangle");
}

std::string Line::str() const {
  return (orientation == Orientation::Horizontal ? "y=" : "x=") + to_string(coord);
}

bool slices(const Line& l, const Rect& r) {
  if (l.orientation == Line::Orientation::Horizontal) return r.y1 < l.coord && l.coord < r.y2;
  return r.x1 < l.coord && l.coord < r.x2;
}

bool y_overlap(const Rect& a, const Rect& b) { return std::max(a.y1, b.y1) < std::min(a.y2, b.y2); }

bool x_contained(const Rect& a, const Rect& b) { return b.x1 <= a.x1 && a.x2 <= b.x2; }

bool independent(const Rect& a, const Rect& b) {
  bool x_disjoint = !(std::max(a.x1, b.x1) < std::min(a.x2, b.x2));
  return x_disjoint && !y_overlap(a, b);
}

std::vector<int> x_heights(const std::vector<Rect>& rects) {
  int n = static_cast<int>(rects.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  // strictly smaller projections have strictly smaller length
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rects[a].x2 - rects[a].x1 < rects[b].x2 - rects[b].x1;
  });
  std::vector<int> ht(n, 1);
  for (int i = 0; i < n; ++i) {
    int r = order[i];
    for (int j = 0; j < i; ++j) {
      int s = order[j];
      bool strict = x_contained(rects[s], rects[r]) && !x_contained(rects[r], rects[s]);
      if (strict) ht[r] = std::max(ht[r], ht[s] + 1);
    }
  }
  return ht;
}

namespace {

void max_independent(const std::vector<std::uint64_t>& compat, std::uint64_t cand, int size, int& best) {
  if (cand == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + std::popcount(cand) <= best) return;
  int v = std::countr_zero(cand);
  max_independent(compat, cand & compat[v], size + 1, best);
  max_independent(compat, cand & ~(std::uint64_t{1} << v), size, best);
}

}  // namespace

int independence_number(const std::vector<Rect>& rects) {
  int n = static_cast<int>(rects.size());
  if (n > 64) throw std::invalid_argument("independence search is limited to 64 rectangles");
  std::vector<std::uint64_t> compat(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && independent(rects[i], rects[j])) compat[i] |= std::uint64_t{1} << j;
  int best = 0;
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  max_independent(compat, all, 0, best);
  return best;
}

long long slicing_bound(int m) {
  long long f = 0;
  for (int i = 0; i < m; ++i) f = 4 * f + 10;
  return f;
}

namespace {

Rect reflect_y(const Rect& r) { return Rect(r.x1, -r.y2, r.x2, -r.y1); }

Line reflect_y(const Line& l) {
  if (l.orientation == Line::Orientation::Horizontal) return Line::horizontal(-l.coord);
  return l;
}

void slice_into(const std::vector<Rect>& rs, const Rational& eps, std::vector<Line>& out) {
  int n = static_cast<int>(rs.size());
  if (n == 0) return;
  auto ht = x_heights(rs);

  int i1 = -1, i2 = -1, best = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (y_overlap(rs[i], rs[j])) continue;
      int h = std::max(ht[i], ht[j]);
      if (i1 < 0 || h < best) {
        best = h;
        i1 = i;
        i2 = j;
      }
    }

  if (i1 < 0) {
    // pairwise overlapping open intervals share a common point
    Rational lo = rs[0].y1, hi = rs[0].y2;
    for (const auto& r : rs) {
      lo = std::max(lo, r.y1);
      hi = std::min(hi, r.y2);
    }
    out.push_back(Line::horizontal((lo + hi) / 2));
    return;
  }
  if (ht[i1] > ht[i2]) std::swap(i1, i2);

  bool flip = rs[i2].y2 <= rs[i1].y1;  // R1 above R2
  std::vector<Rect> work;
  for (const auto& r : rs) work.push_back(flip ? reflect_y(r) : r);
  const Rect& R1 = work[i1];
  const Rect& R2 = work[i2];

  std::vector<Line> local;
  std::vector<int> clique;
  for (int i = 0; i < n; ++i)
    if (ht[i] < ht[i2]) clique.push_back(i);
  if (!clique.empty()) {
    Rational lo = work[clique[0]].y1, hi = work[clique[0]].y2;
    for (int i : clique) {
      lo = std::max(lo, work[i].y1);
      hi = std::min(hi, work[i].y2);
    }
    local.push_back(Line::horizontal((lo + hi) / 2));
  }
  // Side lines pushed inward by eps: they still cross every rectangle the
  // side itself crosses, and now also the open interiors of R1 and R2.
  for (const Rect* r : {&R1, &R2}) {
    local.push_back(Line::vertical(r->x1 + eps));
    local.push_back(Line::vertical(r->x2 - eps));
    local.push_back(Line::horizontal(r->y1 + eps));
    local.push_back(Line::horizontal(r->y2 - eps));
  }

  const Rational &a = R2.x1, &b = R2.x2, &c = R2.y1;
  const Rational &p = R1.x1, &q = R1.x2, &s = R1.y2;
  std::vector<Rect> region_a, region_c, region_d, region_f, region_b, region_e;
  for (int i = 0; i < n; ++i) {
    if (i == i1 || i == i2) continue;
    const Rect& r = work[i];
    if (r.y2 <= c) {
      if (r.x2 <= a) { region_a.push_back(r); continue; }
      if (a <= r.x1 && r.x2 <= b) { region_b.push_back(r); continue; }
      if (r.x1 >= b) { region_c.push_back(r); continue; }
    }
    if (r.y1 >= s) {
      if (r.x2 <= p) { region_d.push_back(r); continue; }
      if (p <= r.x1 && r.x2 <= q) { region_e.push_back(r); continue; }
      if (r.x1 >= q) { region_f.push_back(r); continue; }
    }
  }
  for (const auto* region : {&region_a, &region_c, &region_d, &region_f}) slice_into(*region, eps, local);

  // Rectangles of (b) and (e) whose height is not below ht(R2) share the
  // x-projection of R2 (resp. R1); one vertical line handles each group,
  // or both at once when the two projections overlap.
  auto unsliced = [&](const std::vector<Rect>& region) {
    std::vector<Rect> left;
    for (const auto& r : region)
      if (std::none_of(local.begin(), local.end(), [&](const Line& l) { return slices(l, r); })) left.push_back(r);
    return left;
  };
  auto rest_b = unsliced(region_b), rest_e = unsliced(region_e);
  if (!rest_b.empty() && !rest_e.empty() && std::max(a, p) < std::min(b, q)) {
    local.push_back(Line::vertical((std::max(a, p) + std::min(b, q)) / 2));
  } else {
    if (!rest_b.empty()) local.push_back(Line::vertical((a + b) / 2));
    if (!rest_e.empty()) local.push_back(Line::vertical((p + q) / 2));
  }

  for (const auto& l : local) out.push_back(flip ? reflect_y(l) : l);
}

}  // namespace

std::vector<Line> slice_rectangles(const std::vector<Rect>& rects) {
  std::vector<Line> lines;
  if (rects.empty()) return lines;
  std::vector<Rational> xs, ys;
  for (const auto& r : rects) {
    xs.insert(xs.end(), {r.x1, r.x2});
    ys.insert(ys.end(), {r.y1, r.y2});
  }
  // a quarter of the smallest gap between distinct coordinates
  Rational gap = rects[0].x2 - rects[0].x1;
  for (auto* v : {&xs, &ys}) {
    std::sort(v->begin(), v->end());
    for (std::size_t i = 1; i < v->size(); ++i)
      if ((*v)[i] != (*v)[i - 1]) gap = std::min(gap, Rational((*v)[i] - (*v)[i - 1]));
  }
  slice_into(rects, gap / 4, lines);
  std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
    if (x.orientation != y.orientation) return x.orientation < y.orientation;
    return x.coord < y.coord;
  });
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

std::vector<Rect> read_rects(std::istream& in) {
  std::vector<Rect> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 4) throw std::invalid_argument("rectangle lines need four coordinates: '" + line + "'");
    out.emplace_back(parse_rational(tok[0]), parse_rational(tok[1]), parse_rational(tok[2]),
                     parse_rational(tok[3]));
  }
  return out;
}

}  // namespace permclass
