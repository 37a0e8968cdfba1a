#include "doctest.h"
#include "oracle.hpp"

#include "permclass/rectangles.hpp"

#include <random>
#include <sstream>

using namespace permclass;

namespace {

// A, B, C, D, E of the five-rectangle example
std::vector<Rect> five() {
  return {{20, 100, 150, 180}, {110, 55, 140, 150}, {80, 40, 190, 110}, {30, 20, 100, 70}, {35, 60, 65, 110}};
}

std::vector<oracle::Box> boxes(const std::vector<Rect>& rs) {
  std::vector<oracle::Box> out;
  for (const auto& r : rs) out.push_back({to_double(r.x1), to_double(r.y1), to_double(r.x2), to_double(r.y2)});
  return out;
}

bool all_sliced(const std::vector<Rect>& rs, const std::vector<Line>& lines) {
  return std::all_of(rs.begin(), rs.end(), [&](const Rect& r) {
    return std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return slices(l, r); });
  });
}

}  // namespace

TEST_SUITE("rectangles") {

TEST_CASE("slicing bound recurrence") {
  CHECK(slicing_bound(0) == 0);
  CHECK(slicing_bound(1) == 10);
  CHECK(slicing_bound(2) == 50);
  CHECK(slicing_bound(3) == 210);
}

TEST_CASE("trivial inputs") {
  CHECK(slice_rectangles({}).empty());
  std::vector<Rect> one{{0, 0, 1, 1}};
  auto lines = slice_rectangles(one);
  CHECK(lines.size() == 1);
  CHECK(all_sliced(one, lines));
  CHECK_THROWS_AS(Rect(0, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("independence") {
  CHECK(independence_number({{0, 0, 10, 10}, {2, 2, 3, 3}}) == 1);
  std::vector<Rect> stairs;
  for (int i = 0; i < 6; ++i) stairs.emplace_back(2 * i, 2 * i, 2 * i + 1, 2 * i + 1);
  CHECK(independence_number(stairs) == 6);
  // touching edges do not overlap
  CHECK(independent(Rect(0, 0, 1, 1), Rect(1, 1, 2, 2)));
}

TEST_CASE("the five-rectangle example") {
  auto rs = five();
  std::vector<std::pair<int, int>> drawn{{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  std::vector<std::pair<int, int>> got;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (y_overlap(rs[i], rs[j])) got.emplace_back(i, j);
  CHECK(got == drawn);
  // E below D below A, B below both A and C
  CHECK(x_contained(rs[4], rs[3]));
  CHECK(x_contained(rs[3], rs[0]));
  CHECK(x_contained(rs[1], rs[0]));
  CHECK(x_contained(rs[1], rs[2]));
  CHECK_FALSE(x_contained(rs[2], rs[0]));
  CHECK(x_heights(rs) == std::vector<int>{3, 1, 2, 2, 1});

  int m = independence_number(rs);
  CHECK(m == oracle::independence_number(boxes(rs)));
  auto lines = slice_rectangles(rs);
  CHECK(all_sliced(rs, lines));
  CHECK(static_cast<long long>(lines.size()) <= slicing_bound(m));
}

TEST_CASE("random rational sets") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> num(0, 60), den(1, 4), count(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rect> rs;
    int n = count(rng);
    while (static_cast<int>(rs.size()) < n) {
      Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng)), d(num(rng), den(rng));
      if (a == c || b == d) continue;
      rs.emplace_back(std::min(a, c), std::min(b, d), std::max(a, c), std::max(b, d));
    }
    int m = independence_number(rs);
    REQUIRE(m == oracle::independence_number(boxes(rs)));
    auto lines = slice_rectangles(rs);
    CHECK(all_sliced(rs, lines));
    CHECK(static_cast<long long>(lines.size()) <= slicing_bound(m));
  }
}

TEST_CASE("rectangle files") {
  std::istringstream in("# two boxes\n0 0 1 1\n1/2 1/3 3/2 2\n");
  auto rs = read_rects(in);
  REQUIRE(rs.size() == 2);
  CHECK(rs[1].x1 == Rational(1, 2));
  std::istringstream bad("0 0 0 1\n");
  CHECK_THROWS(read_rects(bad));
  std::istringstream short_line("0 0 1\n");
  CHECK_THROWS_AS(read_rects(short_line), std::invalid_argument);
}

}
