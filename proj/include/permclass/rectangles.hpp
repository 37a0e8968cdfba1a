#pragma once

#include "permclass/numeric.hpp"

#include <istream>
#include <string>
#include <vector>

namespace permclass {

// Closed axis-parallel rectangle [x1, x2] x [y1, y2] with positive area.
struct Rect {
  Rational x1, y1, x2, y2;
  Rect() = default;
  Rect(Rational x1_, Rational y1_, Rational x2_, Rational y2_);
  bool operator==(const Rect&) const = default;
};

struct Line {
  enum class Orientation { Horizontal, Vertical };
  Orientation orientation = Orientation::Horizontal;
  Rational coord;  // y for horizontal lines, x for vertical ones
  static Line horizontal(Rational y) { return {Orientation::Horizontal, std::move(y)}; }
  static Line vertical(Rational x) { return {Orientation::Vertical, std::move(x)}; }
  bool operator==(const Line&) const = default;
  std::string str() const;  // "y=65" / "x=3/2"
};

// The line meets the open interior.
bool slices(const Line& l, const Rect& r);
// Open y-projections overlap.
bool y_overlap(const Rect& a, const Rect& b);
// Closed x-projection containment, the quasi-order used for heights.
bool x_contained(const Rect& a, const Rect& b);
bool independent(const Rect& a, const Rect& b);

// Length of the longest chain of strictly growing x-projections ending at
// each rectangle; minimal elements have height 1.
std::vector<int> x_heights(const std::vector<Rect>& rects);

int independence_number(const std::vector<Rect>& rects);

// f(0) = 0, f(m) = 4 f(m-1) + 10
long long slicing_bound(int m);

std::vector<Line> slice_rectangles(const std::vector<Rect>& rects);

// One rectangle per line: "x1 y1 x2 y2" (rationals like 3/2 allowed),
// '#' comments. Degenerate rectangles are rejected.
std::vector<Rect> read_rects(std::istream& in);

}  // namespace permclass
