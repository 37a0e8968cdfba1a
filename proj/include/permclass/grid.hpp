#pragma once

#include "permclass/perm.hpp"
#include "permclass/perm_class.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace permclass {

struct CellClass {
  enum class Kind { Empty, Inc, Dec, Point, Basis, SumClosure, SkewClosure };
  Kind kind = Kind::Empty;
  std::vector<Perm> perms;  // basis elements or generators

  static CellClass empty() { return {}; }
  static CellClass inc() { return {Kind::Inc, {}}; }
  static CellClass dec() { return {Kind::Dec, {}}; }
  static CellClass point() { return {Kind::Point, {}}; }
  static CellClass avoiding(std::vector<Perm> basis);
  static CellClass sum_closure(std::vector<Perm> gens);
  static CellClass skew_closure(std::vector<Perm> gens);

  bool is_empty() const { return kind == Kind::Empty; }
  bool contains(const Perm& p) const;
  // Image of the class under a symmetry of the square.
  CellClass transformed(const Symmetry& s) const;
  // 0, inc, dec, pt, av(..;..), sumcl(..;..), skewcl(..;..)
  std::string token() const;
  bool operator==(const CellClass&) const = default;
};

CellClass parse_cell(std::string_view token);

// Cells indexed (column, row), 1-based, from the lower left.
class GridMatrix {
 public:
  GridMatrix() = default;
  GridMatrix(int width, int height);

  int width() const { return t_; }
  int height() const { return u_; }
  const CellClass& at(int col, int row) const { return cells_[index(col, row)]; }
  CellClass& at(int col, int row) { return cells_[index(col, row)]; }

  GridMatrix transformed(const Symmetry& s) const;
  // Rows top to bottom, cells separated by commas.
  std::string to_text() const;
  std::string to_inline() const;  // "dec, 0 / inc, inc"
  bool operator==(const GridMatrix&) const = default;

 private:
  int index(int col, int row) const;
  int t_ = 0, u_ = 0;
  std::vector<CellClass> cells_;
};

// One row per line (or separated by '/'), top row first.
GridMatrix parse_matrix(std::string_view text);

struct Gridding {
  std::vector<int> cols;  // c_1 = 1 <= ... <= c_{t+1} = n + 1
  std::vector<int> rows;  // r_1 = 1 <= ... <= r_{u+1} = n + 1
  bool operator==(const Gridding&) const = default;
  auto operator<=>(const Gridding&) const = default;
};

Perm cell_pattern(const Perm& p, const Gridding& g, int col, int row);
bool is_valid_gridding(const Perm& p, const GridMatrix& m, const Gridding& g);
// Lexicographically least gridding (column divisions first).
std::optional<Gridding> find_gridding(const Perm& p, const GridMatrix& m);
std::vector<Gridding> all_griddings(const Perm& p, const GridMatrix& m);

struct GriddedPerm {
  Perm perm;
  Gridding gridding;
  bool operator==(const GriddedPerm&) const = default;
};

struct GriddedEnumeration {
  CountSequence gridded;  // (permutation, gridding) pairs
  CountSequence plain;    // distinct permutations
  std::vector<std::vector<GriddedPerm>> members;  // filled on request
  bool complete = true;
};

GriddedEnumeration enumerate_gridded(const GridMatrix& m, int nmax, bool keep_members = false,
                                     const Budget& budget = {});

struct Cell {
  int col, row;
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

struct MatrixGraph {
  std::vector<Cell> vertices;              // nonempty cells, column-major order
  std::vector<std::pair<int, int>> edges;  // indices into vertices
};

MatrixGraph graph_of_matrix(const GridMatrix& m);
// Each component as the restriction of m to its cells (other cells empty).
std::vector<GridMatrix> components(const GridMatrix& m);
std::vector<std::vector<Cell>> component_cells(const GridMatrix& m);
bool is_forest(const GridMatrix& m);

using ClassSpec = std::variant<FiniteBasisClass, SumClosureClass, SkewClosureClass>;
bool member(const ClassSpec& c, const Perm& p);
std::string describe(const ClassSpec& c);

// Is every finite sum (resp. skew sum) of copies of beta in C?
bool sum_closure_contained(const Perm& beta, const ClassSpec& c);
bool skew_closure_contained(const Perm& beta, const ClassSpec& c);

enum class SumDirection { Sum, Skew };

struct GriddabilityResult {
  bool griddable = true;
  std::optional<Perm> beta;
  std::optional<SumDirection> direction;
};

GriddabilityResult is_D_griddable(const ClassSpec& c, const std::vector<Perm>& d_basis);

}  // namespace permclass
