#pragma once

#include "permclass/perm.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace permclass {

// Pattern of the first n terms of 4,1,6,3,8,5,...
Perm increasing_oscillating_prefix(int n);

// Oscillations of length exactly k, each list sorted lexicographically
// (variant 0 is the smaller one).
std::vector<Perm> increasing_oscillations(int k);
std::vector<Perm> decreasing_oscillations(int k);

enum class OscDirection { Increasing, Decreasing };
struct OscillationSpec {
  OscDirection direction = OscDirection::Increasing;
  int length = 1;
  int variant = 0;
};
Perm oscillation(const OscillationSpec& spec);

bool in_O(const Perm& p);
bool in_O_k(const Perm& p, int k);

const std::vector<Perm>& basis_WO();
// Membership in the wreath closure of the oscillations, via its basis.
bool in_WO(const Perm& p);

Perm u_antichain(int m);

enum class AlternationFamily { Parallel, Wedge, ThreeOne, LinearTriple, HookTriple, UAntichain };

struct AlternationSpec {
  AlternationFamily family = AlternationFamily::Parallel;
  int m = 1;
  Symmetry symmetry;
};

Perm alternation(const AlternationSpec& spec);

// Two monotone halves, split by a vertical or horizontal line, whose
// entries alternate on the other axis.
bool is_parallel_alternation(const Perm& p);

// CLI family names: par-alt, wedge-alt, 31-alt, linear-triple,
// hook-triple, u-antichain, osc-inc, osc-dec.
std::vector<std::string> witness_family_names();
Perm witness_by_name(std::string_view family, int m, const Symmetry& sym = {});

}  // namespace permclass
