#pragma once

#include "permclass/genfun.hpp"
#include "permclass/grid.hpp"
#include "permclass/perm_class.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace permclass {

// Words are plain ASCII. Parallel: l r. Hook: h r t. (3,1): l r, and L
// for a 21-block of the left-hand cell, which weighs 2.
using Word = std::string;

// Two increasing cells side by side, read bottom to top: 'l' when the
// entry sits in the left cell.
GridMatrix parallel_matrix();
Word encode_parallel(const Perm& p, const Gridding& g);
GriddedPerm decode_parallel(const Word& w);

// Sum over i < k of x^i / (1-x)^(i+1).
RationalGF subclass_language_gf(int k);

// Hook cell (1,1), its upper neighbour t = (1,2), its right neighbour
// r = (2,1); all increasing, (2,2) empty.
GridMatrix hook_matrix();
Word encode_hook(const Perm& p, const Gridding& g);
// Throws std::invalid_argument on a word containing "rt".
GriddedPerm decode_hook(const Word& w);

// Left cell sumcl(21), right cell increasing.
GridMatrix three_one_matrix();
// Reads bottom to top. Throws std::domain_error when a right-hand value
// falls strictly between the two values of a 21-block, since such
// griddings have no word.
Word encode_31(const Perm& p, const Gridding& g);
GriddedPerm decode_31(const Word& w);
int word_weight(const Word& w);

// Deterministic recognizer; transitions to -1 reject.
struct WeightedLanguage {
  std::map<char, int> weights;
  int start = 0;
  std::vector<bool> accepting;
  std::vector<std::map<char, int>> delta;

  int states() const { return static_cast<int>(accepting.size()); }
  bool accepts(const Word& w) const;
};

CountSequence count_language(const WeightedLanguage& lang, int nmax);

WeightedLanguage parallel_language();
WeightedLanguage hook_language();  // {h,r,t}* without the factor rt
WeightedLanguage three_one_language();

// All accepted words of total weight n, lexicographic.
std::vector<Word> words_of_weight(const WeightedLanguage& lang, int n);

RationalGF parallel_gf();
RationalGF hook_gf();
RationalGF three_one_gf();

}  // namespace permclass
