#include "permclass/perm_class.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace permclass {

FiniteBasisClass FiniteBasisClass::normalize(std::vector<Perm> raw) {
  if (raw.empty()) throw std::invalid_argument("a basis needs at least one permutation");
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  FiniteBasisClass c;
  for (const auto& b : raw) {
    bool minimal = std::none_of(c.basis_.begin(), c.basis_.end(),
                                [&](const Perm& k) { return permclass::contains(k, b); });
    if (minimal) c.basis_.push_back(b);
  }
  return c;
}

bool FiniteBasisClass::contains(const Perm& p) const { return avoids_all(p, basis_); }

std::string FiniteBasisClass::str() const {
  std::string out = "Av(";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += basis_[i].str();
  }
  return out + ")";
}

bool avoids_all(const Perm& p, const std::vector<Perm>& patterns) {
  for (const auto& b : patterns)
    if (contains(b, p)) return false;
  return true;
}

bool avoids(const Perm& p, const FiniteBasisClass& c) { return c.contains(p); }

namespace {

bool embeds_in_some(const Perm& p, const std::vector<Perm>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Perm& g) { return contains(p, g); });
}

std::string list_str(const char* head, const std::vector<Perm>& gens) {
  std::string out = head;
  out += "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i].str();
  }
  return out + ")";
}

}  // namespace

SumClosureClass::SumClosureClass(std::vector<Perm> generators) : gens_(std::move(generators)) {
  std::sort(gens_.begin(), gens_.end());
}

bool SumClosureClass::contains(const Perm& p) const {
  for (const auto& comp : sum_components(p))
    if (!embeds_in_some(comp, gens_)) return false;
  return true;
}

std::string SumClosureClass::str() const { return list_str("sumcl", gens_); }

SkewClosureClass::SkewClosureClass(std::vector<Perm> generators) : gens_(std::move(generators)) {
  std::sort(gens_.begin(), gens_.end());
}

bool SkewClosureClass::contains(const Perm& p) const {
  for (const auto& comp : skew_components(p))
    if (!embeds_in_some(comp, gens_)) return false;
  return true;
}

std::string SkewClosureClass::str() const { return list_str("skewcl", gens_); }

Budget Budget::seconds(double s) {
  Budget b;
  if (s > 0)
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(s));
  return b;
}

Enumeration enumerate_class(const PermPredicate& member, int nmax, const Budget& budget) {
  if (nmax < 0) throw std::invalid_argument("nmax must be nonnegative");
  Enumeration e;
  e.members.push_back({Perm()});
  e.counts.push_back(1);
  for (int n = 1; n <= nmax; ++n) {
    std::vector<Perm> next;
    std::vector<int> buf(n);
    for (const auto& parent : e.members[n - 1]) {
      if (budget.expired()) {
        e.complete = false;
        return e;
      }
      const auto& pv = parent.values();
      for (int slot = 0; slot < n; ++slot) {
        std::copy(pv.begin(), pv.begin() + slot, buf.begin());
        buf[slot] = n;
        std::copy(pv.begin() + slot, pv.end(), buf.begin() + slot + 1);
        Perm cand(buf);
        if (member(cand)) next.push_back(std::move(cand));
      }
    }
    std::sort(next.begin(), next.end());
    e.counts.emplace_back(next.size());
    e.members.push_back(std::move(next));
  }
  return e;
}

Enumeration enumerate(const FiniteBasisClass& c, int nmax, const Budget& budget) {
  if (c.is_all_perms()) throw std::invalid_argument("enumerate: class of all permutations");
  return enumerate_class([&](const Perm& p) { return c.contains(p); }, nmax, budget);
}

std::vector<Perm> DownsetOfPerms::of_length(int n) const {
  std::vector<Perm> out;
  for (const auto& p : members_)
    if (p.size() == n) out.push_back(p);
  return out;
}

DownsetOfPerms closure(const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  std::deque<Perm> queue;
  seen.insert(Perm());
  for (const auto& g : gens)
    if (seen.insert(g).second) queue.push_back(g);
  while (!queue.empty()) {
    Perm p = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < p.size(); ++i) {
      Perm q = delete_entry(p, i);
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return DownsetOfPerms(std::move(seen));
}

CountSequence sum_indecomposables_in(const DownsetOfPerms& d, int nmax) {
  CountSequence out(nmax + 1, 0);
  for (const auto& p : d.members())
    if (!p.empty() && p.size() <= nmax && is_sum_indecomposable(p)) out[p.size()] += 1;
  return out;
}

CountSequence sum_indecomposables_in(const FiniteBasisClass& c, int nmax) {
  auto e = enumerate(c, nmax);
  CountSequence out(nmax + 1, 0);
  for (int n = 1; n <= nmax; ++n)
    for (const auto& p : e.members[n])
      if (is_sum_indecomposable(p)) out[n] += 1;
  return out;
}

CountSequence sum_closure_counts(const std::vector<Perm>& gens, int nmax) {
  auto f = sum_indecomposables_in(closure(gens), nmax);
  CountSequence c(nmax + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= nmax; ++n)
    for (int k = 1; k <= n; ++k) c[n] += f[k] * c[n - k];
  return c;
}

bool is_antichain(const std::vector<Perm>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i != j && contains(s[i], s[j])) return false;
  return true;
}

bool in_wreath_closure(const Perm& p, const PermPredicate& simple_oracle) {
  auto down = closure({p});
  for (const auto& q : down.members())
    if (!q.empty() && is_simple(q) && !simple_oracle(q)) return false;
  return true;
}

std::vector<Perm> read_perm_list(std::istream& in) {
  std::vector<Perm> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_perm(line));
  }
  return out;
}

}  // namespace permclass
