#include "permclass/encodings.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace permclass {

namespace {

void require_valid(const Perm& p, const GridMatrix& m, const Gridding& g, const char* what) {
  if (!is_valid_gridding(p, m, g)) throw std::invalid_argument(std::string("not a valid gridding for the ") + what);
}

// position of each value, 1-based
std::vector<int> positions_by_value(const Perm& p) {
  std::vector<int> pos(p.size() + 1, 0);
  for (int i = 1; i <= p.size(); ++i) pos[p(i)] = i;
  return pos;
}

void check_letters(const Word& w, std::string_view allowed) {
  for (char c : w)
    if (allowed.find(c) == std::string_view::npos)
      throw std::invalid_argument(std::string("unexpected letter '") + c + "' in word " + w);
}

}  // namespace

GridMatrix parallel_matrix() {
  GridMatrix m(2, 1);
  m.at(1, 1) = CellClass::inc();
  m.at(2, 1) = CellClass::inc();
  return m;
}

Word encode_parallel(const Perm& p, const Gridding& g) {
  require_valid(p, parallel_matrix(), g, "parallel matrix");
  auto pos = positions_by_value(p);
  Word w;
  for (int v = 1; v <= p.size(); ++v) w += pos[v] < g.cols[1] ? 'l' : 'r';
  return w;
}

GriddedPerm decode_parallel(const Word& w) {
  check_letters(w, "lr");
  int n = static_cast<int>(w.size());
  int left = static_cast<int>(std::count(w.begin(), w.end(), 'l'));
  std::vector<int> v(n);
  int next_l = 1, next_r = left + 1, value = 1;
  for (char c : w) v[(c == 'l' ? next_l++ : next_r++) - 1] = value++;
  return {Perm(std::move(v)), Gridding{{1, left + 1, n + 1}, {1, n + 1}}};
}

RationalGF subclass_language_gf(int k) {
  if (k < 1) throw std::invalid_argument("the avoided word has length at least 1");
  Poly one_minus_x = Poly::constant(1) - Poly::x();
  RationalGF total;
  for (int i = 0; i < k; ++i) total = total + RationalGF(Poly::monomial(1, i), one_minus_x.pow(i + 1));
  return total;
}

GridMatrix hook_matrix() {
  GridMatrix m(2, 2);
  m.at(1, 1) = CellClass::inc();
  m.at(1, 2) = CellClass::inc();
  m.at(2, 1) = CellClass::inc();
  return m;
}

Word encode_hook(const Perm& p, const Gridding& g) {
  require_valid(p, hook_matrix(), g, "hook matrix");
  int c = g.cols[1], r = g.rows[1];
  auto pos = positions_by_value(p);

  // h/t read left to right along the first column, h/r bottom to top along the first row
  std::vector<std::string> ht_gaps(1), hr_gaps(1);
  for (int i = 1; i < c; ++i) {
    if (p(i) < r) ht_gaps.emplace_back();
    else ht_gaps.back() += 't';
  }
  for (int v = 1; v < r; ++v) {
    if (pos[v] < c) hr_gaps.emplace_back();
    else hr_gaps.back() += 'r';
  }
  Word w;
  for (std::size_t k = 0; k < ht_gaps.size(); ++k) {
    if (k > 0) w += 'h';
    w += ht_gaps[k] + hr_gaps[k];
  }
  return w;
}

GriddedPerm decode_hook(const Word& w) {
  check_letters(w, "hrt");
  if (w.find("rt") != Word::npos) throw std::invalid_argument("hook words never contain the factor rt: " + w);
  int n = static_cast<int>(w.size());
  int col1 = 0, row1 = 0;
  for (char ch : w) {
    if (ch != 'r') ++col1;
    if (ch != 't') ++row1;
  }
  std::vector<int> v(n);
  int next_left = 1, next_right = col1 + 1, next_low = 1, next_high = row1 + 1;
  for (char ch : w) {
    int position = ch == 'r' ? next_right++ : next_left++;
    int value = ch == 't' ? next_high++ : next_low++;
    v[position - 1] = value;
  }
  return {Perm(std::move(v)), Gridding{{1, col1 + 1, n + 1}, {1, row1 + 1, n + 1}}};
}

GridMatrix three_one_matrix() {
  GridMatrix m(2, 1);
  m.at(1, 1) = CellClass::sum_closure({Perm{2, 1}});
  m.at(2, 1) = CellClass::inc();
  return m;
}

int word_weight(const Word& w) {
  int total = 0;
  for (char c : w) total += c == 'L' ? 2 : 1;
  return total;
}

Word encode_31(const Perm& p, const Gridding& g) {
  require_valid(p, three_one_matrix(), g, "(3,1) matrix");
  int c = g.cols[1];
  auto pos = positions_by_value(p);
  Word w;
  for (int v = 1; v <= p.size(); ++v) {
    int i = pos[v];
    if (i >= c) {
      w += 'r';
      continue;
    }
    // inside the left cell a 21-block is a descent at adjacent positions
    if (i + 1 < c && p(i + 1) < p(i)) continue;  // upper entry, emitted with its partner
    if (i > 1 && p(i - 1) > p(i)) {
      if (p(i - 1) != v + 1)
        throw std::domain_error("a right-hand entry separates the values of a 21-block in " + p.str());
      w += 'L';
    } else {
      w += 'l';
    }
  }
  return w;
}

GriddedPerm decode_31(const Word& w) {
  check_letters(w, "lLr");
  int n = word_weight(w);
  std::vector<int> left, right;
  int value = 1;
  for (char ch : w) {
    if (ch == 'r') right.push_back(value++);
    else if (ch == 'l') left.push_back(value++);
    else {
      left.push_back(value + 1);
      left.push_back(value);
      value += 2;
    }
  }
  int c = static_cast<int>(left.size()) + 1;
  left.insert(left.end(), right.begin(), right.end());
  return {Perm(std::move(left)), Gridding{{1, c, n + 1}, {1, n + 1}}};
}

bool WeightedLanguage::accepts(const Word& w) const {
  int s = start;
  for (char c : w) {
    auto it = delta[s].find(c);
    if (it == delta[s].end() || it->second < 0) return false;
    s = it->second;
  }
  return accepting[s];
}

CountSequence count_language(const WeightedLanguage& lang, int nmax) {
  int S = lang.states();
  // ways[n][s]: words of weight n ending in state s
  std::vector<std::vector<BigInt>> ways(nmax + 1, std::vector<BigInt>(S, 0));
  if (nmax >= 0) ways[0][lang.start] = 1;
  for (int n = 0; n <= nmax; ++n)
    for (int s = 0; s < S; ++s) {
      if (ways[n][s] == 0) continue;
      for (const auto& [letter, target] : lang.delta[s]) {
        int m = n + lang.weights.at(letter);
        if (target < 0 || m > nmax) continue;
        ways[m][target] += ways[n][s];
      }
    }
  CountSequence out(nmax + 1, 0);
  for (int n = 0; n <= nmax; ++n)
    for (int s = 0; s < S; ++s)
      if (lang.accepting[s]) out[n] += ways[n][s];
  return out;
}

WeightedLanguage parallel_language() {
  WeightedLanguage L;
  L.weights = {{'l', 1}, {'r', 1}};
  L.accepting = {true};
  L.delta = {{{'l', 0}, {'r', 0}}};
  return L;
}

WeightedLanguage hook_language() {
  // state 1: last letter was r
  WeightedLanguage L;
  L.weights = {{'h', 1}, {'r', 1}, {'t', 1}};
  L.accepting = {true, true};
  L.delta = {{{'h', 0}, {'r', 1}, {'t', 0}}, {{'h', 0}, {'r', 1}, {'t', -1}}};
  return L;
}

WeightedLanguage three_one_language() {
  WeightedLanguage L;
  L.weights = {{'L', 2}, {'l', 1}, {'r', 1}};
  L.accepting = {true};
  L.delta = {{{'L', 0}, {'l', 0}, {'r', 0}}};
  return L;
}

std::vector<Word> words_of_weight(const WeightedLanguage& lang, int n) {
  std::vector<Word> out;
  Word cur;
  std::function<void(int, int)> go = [&](int state, int left) {
    if (left == 0) {
      if (lang.accepting[state]) out.push_back(cur);
      return;
    }
    for (const auto& [letter, target] : lang.delta[state]) {
      int wt = lang.weights.at(letter);
      if (target < 0 || wt > left) continue;
      cur.push_back(letter);
      go(target, left - wt);
      cur.pop_back();
    }
  };
  go(lang.start, n);
  std::sort(out.begin(), out.end());
  return out;
}

RationalGF parallel_gf() { return RationalGF(Poly::constant(1), parse_poly("1 - 2*x")); }
RationalGF hook_gf() { return RationalGF(Poly::constant(1), parse_poly("1 - 3*x + x^2")); }
RationalGF three_one_gf() { return RationalGF(Poly::constant(1), parse_poly("1 - 2*x - x^2")); }

}  // namespace permclass
