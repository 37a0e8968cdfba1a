#pragma once

#include "permclass/numeric.hpp"
#include "permclass/perm.hpp"

#include <chrono>
#include <functional>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace permclass {

// Index 0 counts the empty permutation.
using CountSequence = std::vector<BigInt>;

using PermPredicate = std::function<bool(const Perm&)>;

class FiniteBasisClass {
 public:
  // The class of all permutations (empty basis).
  FiniteBasisClass() = default;
  // Throws on empty input; minimal elements only are kept.
  static FiniteBasisClass normalize(std::vector<Perm> raw);

  const std::vector<Perm>& basis() const { return basis_; }
  bool is_all_perms() const { return basis_.empty(); }
  bool contains(const Perm& p) const;  // p avoids every basis element
  std::string str() const;             // "Av(21, 312)"

 private:
  std::vector<Perm> basis_;
};

inline FiniteBasisClass normalize_basis(std::vector<Perm> raw) {
  return FiniteBasisClass::normalize(std::move(raw));
}

bool avoids(const Perm& p, const FiniteBasisClass& c);
bool avoids_all(const Perm& p, const std::vector<Perm>& patterns);

// The smallest sum-closed class containing the closure of the generators:
// p is a member iff every sum component of p embeds in some generator.
class SumClosureClass {
 public:
  explicit SumClosureClass(std::vector<Perm> generators);
  const std::vector<Perm>& generators() const { return gens_; }
  bool contains(const Perm& p) const;
  std::string str() const;

 private:
  std::vector<Perm> gens_;
};

// Mirror image of SumClosureClass under complement.
class SkewClosureClass {
 public:
  explicit SkewClosureClass(std::vector<Perm> generators);
  const std::vector<Perm>& generators() const { return gens_; }
  bool contains(const Perm& p) const;
  std::string str() const;

 private:
  std::vector<Perm> gens_;
};

struct Budget {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  static Budget seconds(double s);
  bool expired() const { return deadline && std::chrono::steady_clock::now() > *deadline; }
};

struct Enumeration {
  CountSequence counts;
  std::vector<std::vector<Perm>> members;  // members[n], sorted
  bool complete = true;                    // false when the budget ran out
};

// Grows lengths by inserting a new maximum into every slot of each
// shorter member, keeping candidates accepted by the predicate. Valid for
// any predicate describing a class.
Enumeration enumerate_class(const PermPredicate& member, int nmax, const Budget& budget = {});
Enumeration enumerate(const FiniteBasisClass& c, int nmax, const Budget& budget = {});

class DownsetOfPerms {
 public:
  DownsetOfPerms() = default;
  explicit DownsetOfPerms(std::set<Perm> members) : members_(std::move(members)) {}
  const std::set<Perm>& members() const { return members_; }
  bool contains(const Perm& p) const { return members_.count(p) != 0; }
  int max_length() const { return members_.empty() ? -1 : members_.rbegin()->size(); }
  std::size_t size() const { return members_.size(); }
  std::vector<Perm> of_length(int n) const;

 private:
  std::set<Perm> members_;
};

DownsetOfPerms closure(const std::vector<Perm>& gens);

// Counts by length of sum-indecomposable members; index 0 is always 0.
CountSequence sum_indecomposables_in(const DownsetOfPerms& d, int nmax);
CountSequence sum_indecomposables_in(const FiniteBasisClass& c, int nmax);

// Counts of the sum completion of closure(gens), by a composition DP.
CountSequence sum_closure_counts(const std::vector<Perm>& gens, int nmax);

bool is_antichain(const std::vector<Perm>& s);

bool in_wreath_closure(const Perm& p, const PermPredicate& simple_oracle);

// Basis file: one permutation per line, '#' comments, blank lines skipped.
std::vector<Perm> read_perm_list(std::istream& in);

}  // namespace permclass
