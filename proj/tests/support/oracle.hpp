#pragma once

// Deliberately naive reference implementations. Nothing here calls into
// the library, so tests comparing against these are independent checks.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;
using Big = boost::multiprecision::cpp_int;

inline Seq standardize(const Seq& s) {
  Seq idx(s.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return s[a] < s[b]; });
  Seq out(s.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
  return out;
}

// Try every k-subset of positions.
inline bool contains(const Seq& pat, const Seq& txt) {
  int k = static_cast<int>(pat.size()), n = static_cast<int>(txt.size());
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Seq sub;
    for (int i = 0; i < n; ++i)
      if (pick[i]) sub.push_back(txt[i]);
    if (standardize(sub) == pat) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline bool avoids_all(const Seq& p, const std::vector<Seq>& basis) {
  return std::none_of(basis.begin(), basis.end(), [&](const Seq& b) { return contains(b, p); });
}

// Every window of consecutive positions of length 2..n-1 must not hold a
// contiguous range of values.
inline bool is_simple(const Seq& p) {
  int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (j - i + 1 == n) continue;
      auto [lo, hi] = std::minmax_element(p.begin() + i, p.begin() + j + 1);
      if (*hi - *lo == j - i) return false;
    }
  return true;
}

inline bool is_sum_indecomposable(const Seq& p) {
  int mx = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    mx = std::max(mx, p[k]);
    if (mx == static_cast<int>(k) + 1) return false;
  }
  return !p.empty();
}

inline void for_each_perm(int n, const std::function<void(const Seq&)>& f) {
  Seq p(n);
  std::iota(p.begin(), p.end(), 1);
  do f(p);
  while (std::next_permutation(p.begin(), p.end()));
}

inline std::vector<long long> class_counts(const std::vector<Seq>& basis, int nmax) {
  std::vector<long long> out;
  for (int n = 0; n <= nmax; ++n) {
    long long c = 0;
    for_each_perm(n, [&](const Seq& p) { c += avoids_all(p, basis) ? 1 : 0; });
    out.push_back(c);
  }
  return out;
}

// Power series division num/den with den[0] = +-1.
inline std::vector<Big> series(const std::vector<long long>& num, const std::vector<long long>& den, int nmax) {
  std::vector<Big> a(nmax + 1, 0);
  for (int n = 0; n <= nmax; ++n) {
    Big s = n < static_cast<int>(num.size()) ? Big(num[n]) : Big(0);
    for (int i = 1; i <= n && i < static_cast<int>(den.size()); ++i) s -= Big(den[i]) * a[n - i];
    a[n] = s / den[0];
  }
  return a;
}

// Cell predicates, indexed [col][row] from the lower left.
using CellTest = std::function<bool(const Seq&)>;
using Cells = std::vector<std::vector<CellTest>>;

inline bool increasing(const Seq& s) { return std::is_sorted(s.begin(), s.end()); }
inline bool decreasing(const Seq& s) { return std::is_sorted(s.rbegin(), s.rend()); }
inline bool nothing(const Seq& s) { return s.empty(); }

// Layered with layers of size at most two: sums of 1 and 21.
inline bool sum_of_ones_and_21(const Seq& s) {
  std::size_t i = 0;
  int base = 0;
  while (i < s.size()) {
    if (s[i] == base + 1) {
      ++base;
      ++i;
    } else if (s[i] == base + 2 && i + 1 < s.size() && s[i + 1] == base + 1) {
      base += 2;
      i += 2;
    } else {
      return false;
    }
  }
  return true;
}

// Number of griddings: every nondecreasing choice of column and row
// divisions, every cell checked.
inline long long count_griddings(const Seq& p, const Cells& m) {
  int n = static_cast<int>(p.size());
  int t = static_cast<int>(m.size()), u = static_cast<int>(m[0].size());
  long long total = 0;
  std::vector<int> c(t + 1, 1), r(u + 1, 1);
  c[t] = n + 1;
  r[u] = n + 1;
  std::function<void(int)> rows, cols;
  auto check = [&] {
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < u; ++j) {
        Seq sub;
        for (int pos = c[i]; pos < c[i + 1]; ++pos)
          if (p[pos - 1] >= r[j] && p[pos - 1] < r[j + 1]) sub.push_back(p[pos - 1]);
        if (!m[i][j](standardize(sub))) return false;
      }
    return true;
  };
  rows = [&](int j) {
    if (j == u) {
      total += check() ? 1 : 0;
      return;
    }
    for (int v = r[j - 1]; v <= n + 1; ++v) {
      r[j] = v;
      rows(j + 1);
    }
  };
  cols = [&](int i) {
    if (i == t) {
      rows(1);
      return;
    }
    for (int v = c[i - 1]; v <= n + 1; ++v) {
      c[i] = v;
      cols(i + 1);
    }
  };
  cols(1);
  return total;
}

inline std::vector<long long> gridded_counts(const Cells& m, int nmax) {
  std::vector<long long> out;
  for (int n = 0; n <= nmax; ++n) {
    long long s = 0;
    for_each_perm(n, [&](const Seq& p) { s += count_griddings(p, m); });
    out.push_back(s);
  }
  return out;
}

struct Box {
  double x1, y1, x2, y2;
};

// Open projections disjoint on both axes, pairwise over the whole subset.
inline int independence_number(const std::vector<Box>& rs) {
  int n = static_cast<int>(rs.size()), best = 0;
  auto indep = [](const Box& a, const Box& b) {
    bool xd = std::max(a.x1, b.x1) >= std::min(a.x2, b.x2);
    bool yd = std::max(a.y1, b.y1) >= std::min(a.y2, b.y2);
    return xd && yd;
  };
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !indep(rs[i], rs[j])) ok = false;
    if (ok) best = size;
  }
  return best;
}

// Largest root of a polynomial in [lo, hi] located by a fine scan and
// plain bisection in doubles.
inline double largest_root(const std::vector<double>& c, double lo, double hi) {
  auto f = [&](double x) {
    double s = 0;
    for (std::size_t i = c.size(); i-- > 0;) s = s * x + c[i];
    return s;
  };
  const int steps = 200000;
  double h = (hi - lo) / steps;
  for (int i = steps; i > 0; --i) {
    double a = lo + (i - 1) * h, b = lo + i * h;
    if ((f(a) < 0) != (f(b) < 0) || f(b) == 0) {
      for (int it = 0; it < 200; ++it) {
        double mid = (a + b) / 2;
        if ((f(a) < 0) != (f(mid) < 0)) b = mid;
        else a = mid;
      }
      return (a + b) / 2;
    }
  }
  return NAN;
}

}  // namespace oracle
