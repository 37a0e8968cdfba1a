#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permclass {

// One-line notation, values are ranks 1..n.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> values);
  Perm(std::initializer_list<int> values) : Perm(std::vector<int>(values)) {}

  static Perm identity(int n);
  static Perm decreasing(int n);
  // Pattern of an arbitrary sequence of distinct integers.
  static Perm standardize(std::span<const int> seq);

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  // 1-based access, mirroring pi(i).
  int operator()(int pos) const { return v_[pos - 1]; }
  const std::vector<int>& values() const { return v_; }

  std::string str() const;

  bool operator==(const Perm&) const = default;
  // Shortlex: shorter first, then lexicographic.
  std::strong_ordering operator<=>(const Perm& o) const;

 private:
  std::vector<int> v_;
};

std::ostream& operator<<(std::ostream& os, const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

// Accepts "2413" when every rank is a single digit, otherwise ranks
// separated by spaces and/or commas. Throws std::invalid_argument.
Perm parse_perm(std::string_view text);

// Closed integer interval; empty when lo > hi.
struct Interval {
  int lo = 1;
  int hi = 0;
  int length() const { return hi >= lo ? hi - lo + 1 : 0; }
  bool contains(int x) const { return lo <= x && x <= hi; }
  bool operator==(const Interval&) const = default;
};

bool contains(const Perm& pattern, const Perm& target);
// 0-based positions in target of one occurrence, if any.
std::optional<std::vector<int>> find_embedding(const Perm& pattern, const Perm& target);

Perm restrict(const Perm& p, Interval positions, Interval values);

struct Block {
  Interval positions;
  Interval values;
  bool operator==(const Block&) const = default;
};
std::vector<Block> proper_intervals(const Perm& p);
bool is_simple(const Perm& p);

Perm inflate(const Perm& skeleton, std::span<const Perm> components);

struct SimpleDecomposition {
  Perm skeleton;
  std::vector<Perm> components;
};
SimpleDecomposition simple_decomposition(const Perm& p);

class PermGraph {
 public:
  explicit PermGraph(const Perm& p);
  int vertex_count() const { return n_; }
  // Pairs (i, j), 1-based, i < j.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int i, int j) const { return adj_[(i - 1) * n_ + (j - 1)] != 0; }
  bool connected() const;
  bool has_path(int from, int to) const;
  // Neighbours of vertex i (1-based).
  std::vector<int> neighbours(int i) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint8_t> adj_;
};

PermGraph perm_graph(const Perm& p);

bool is_sum_indecomposable(const Perm& p);
bool is_sum_indecomposable_by_path(const Perm& p);
bool is_skew_indecomposable(const Perm& p);
std::vector<Perm> sum_components(const Perm& p);
std::vector<Perm> skew_components(const Perm& p);

Perm direct_sum(const Perm& a, const Perm& b);
Perm skew_sum(const Perm& a, const Perm& b);
Perm sum_power(const Perm& p, int k);
Perm skew_power(const Perm& p, int k);

Perm reverse(const Perm& p);
Perm complement(const Perm& p);
Perm inverse(const Perm& p);

// Elements of the dihedral group of the square. Applied as: inverse
// first (if set), then reverse, then complement.
struct Symmetry {
  bool inv = false;
  bool rev = false;
  bool comp = false;

  static const std::array<Symmetry, 8>& all();
  static Symmetry identity() { return {}; }
  static Symmetry parse(std::string_view name);

  Perm apply(const Perm& p) const;
  // (a.then(b)).apply(p) == b.apply(a.apply(p))
  Symmetry then(const Symmetry& b) const;
  Symmetry inverse_element() const;
  std::string name() const;
  bool operator==(const Symmetry&) const = default;
};

std::vector<Perm> symmetry_orbit(const Perm& p);

// All permutations of length n in lexicographic order.
std::vector<Perm> all_perms(int n);
void for_each_perm(int n, const std::function<void(const Perm&)>& f);

// Delete the entry at a 0-based position and standardize.
Perm delete_entry(const Perm& p, int pos);

}  // namespace permclass
