#pragma once

#include "permclass/algebraic.hpp"
#include "permclass/genfun.hpp"
#include "permclass/grid.hpp"
#include "permclass/perm_class.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permclass {

// Largest positive roots of 1+2x^2-x^3 and 1+2x+x^2+x^3-x^4.
AlgebraicNumber kappa();
AlgebraicNumber nu();

enum class Family { Zero, I, II, III, IV, V, VI };
std::string family_name(Family f);  // "0", "I", ..., "VI"
Family parse_family(std::string_view s);

// The defining polynomial of the sequence family. k >= 1 for I, k >= 0
// for III-VI, ell >= 1 for V. Throws std::invalid_argument otherwise.
Poly family_poly(Family f, int k = 0, int ell = 0);

// Counts of sum indecomposables from length 1, optionally followed by a
// constant value repeated forever.
struct SequenceSpec {
  std::vector<int> prefix;
  std::optional<int> tail;
  std::string str() const;  // "(1,1,2x3,4)", "(1xinf)"
};

// "1,1,2x3,4", "(1,1,2×k,3)" with k substituted beforehand, "1xinf".
SequenceSpec parse_sequence(std::string_view text);

RationalGF seq_to_gf(const SequenceSpec& spec);
bool is_large(const SequenceSpec& spec);

struct GrowthRateEntry {
  Family family = Family::Zero;
  int k = -1;    // -1 when the family has no such parameter
  int ell = -1;
  Poly poly;
  AlgebraicNumber value;
};

// 0 and every family value with k <= max_k, ell <= max_ell, below kappa,
// sorted ascending with algebraically equal values merged (first
// occurrence in family order kept).
std::vector<GrowthRateEntry> list_subkappa_rates(int max_k, int max_ell);
AlgebraicNumber family_value(Family f, int k = 0, int ell = 0);

struct KappaWitness {
  std::string condition;  // which check fired
  std::string detail;     // offending permutation or grid class
};

struct KappaCheck {
  std::string name;
  bool passed = true;
};

struct KappaVerdict {
  bool below_kappa = true;
  std::vector<KappaWitness> witnesses;  // nonempty exactly when !below_kappa
  std::vector<KappaCheck> checks;
};

// The canonical classes whose containment forces long (3,1), linear
// triple or hook triple alternations, closed under symmetry.
struct NamedGrid {
  std::string label;
  GridMatrix matrix;
};
std::vector<NamedGrid> alternation_grid_classes();

// Runs every check and collects every witness, so the verdict records all
// the reasons a class is not small. Throws on the class of all perms.
KappaVerdict decide_sub_kappa(const FiniteBasisClass& c);

struct AccumulationRow {
  std::string label;      // "V(1,3)" or "VI(4)"
  AlgebraicNumber value;
  AlgebraicNumber limit;  // VI(k) for family V rows, kappa for VI rows
  bool increasing = true; // strictly above the previous row of its series
  double gap = 0;         // limit - value
};

struct AccumulationReport {
  std::vector<AccumulationRow> rows;
  bool v_monotone = true;
  bool vi_monotone = true;
  bool below_limits = true;
};

AccumulationReport accumulation_scan(int k_max, int ell_max);

}  // namespace permclass
