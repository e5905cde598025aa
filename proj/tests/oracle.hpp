#ifndef MIXMULT_TESTS_ORACLE_HPP
#define MIXMULT_TESTS_ORACLE_HPP

// Brute-force reference computations. Nothing here calls into the library's
// ideal arithmetic or counting: generator lists are plain exponent vectors,
// products are unminimized pairwise sums, and membership is divisibility.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;
using Gens = std::vector<Exps>;

inline Exps add(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline int deg(const Exps& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

inline Gens unit(std::size_t m) { return {Exps(m, 0)}; }

inline Gens product(const Gens& a, const Gens& b) {
  Gens r;
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(add(x, y));
  return r;
}

inline Gens power(const Gens& a, int n, std::size_t m) {
  Gens r = unit(m);
  for (int i = 0; i < n; ++i) r = product(r, a);
  return r;
}

inline Gens sum(Gens a, const Gens& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline bool member(const Exps& u, const Gens& g) {
  for (const auto& x : g) {
    bool div = true;
    for (std::size_t i = 0; i < u.size() && div; ++i) div = x[i] <= u[i];
    if (div) return true;
  }
  return false;
}

inline int max_deg(const Gens& g) {
  int d = 0;
  for (const auto& x : g) d = std::max(d, deg(x));
  return d;
}

// every monomial of total degree <= bound
inline void each_monomial(std::size_t m, int bound, const std::function<void(const Exps&)>& fn) {
  Exps cur(m, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v == m) {
      fn(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[v] = e;
      rec(v + 1, left - e);
    }
    cur[v] = 0;
  };
  rec(0, bound);
}

// #{u : u in upper, u not in lower, deg u <= bound}
inline std::int64_t count_between(std::size_t m, const Gens& upper, const Gens& lower, int bound) {
  std::int64_t n = 0;
  each_monomial(m, bound, [&](const Exps& u) {
    if (member(u, upper) && !member(u, lower)) ++n;
  });
  return n;
}

// smallest s with m^s inside J, for J containing a pure power of every variable
inline int primary_exponent(const Gens& j, std::size_t m) {
  int s = 1;
  for (std::size_t i = 0; i < m; ++i) {
    int best = -1;
    for (const auto& g : j) {
      bool pure = true;
      for (std::size_t k = 0; k < m; ++k)
        if (k != i && g[k] != 0) pure = false;
      if (pure && g[i] > 0 && (best < 0 || g[i] < best)) best = g[i];
    }
    if (best < 0) return -1;
    s += best - 1;
  }
  return s;
}

struct Family {
  std::size_t m;
  Gens j;
  std::vector<Gens> ideals;
};

inline Gens rees(const Family& f, const std::vector<int>& n, const Gens& num) {
  Gens r = num;
  for (std::size_t i = 0; i < f.ideals.size(); ++i) r = product(r, power(f.ideals[i], n[i + 1], f.m));
  return r;
}

// l(J^{n0} I^n num / (J^{n0+1} I^n num + den))
inline std::int64_t P(const Family& f, const Gens& num, const Gens& den, const std::vector<int>& n) {
  Gens upper = product(power(f.j, n[0], f.m), rees(f, n, num));
  Gens lower = sum(product(f.j, upper), den);
  int bound = max_deg(upper) + primary_exponent(f.j, f.m) - 1;
  return count_between(f.m, upper, lower, bound);
}

// l(I^n num / (J^{n0} I^n num + den))
inline std::int64_t F(const Family& f, const Gens& num, const Gens& den, const std::vector<int>& n) {
  Gens upper = rees(f, n, num);
  if (n[0] == 0) return 0;
  Gens lower = sum(product(power(f.j, n[0], f.m), upper), den);
  int bound = max_deg(upper) + n[0] * primary_exponent(f.j, f.m) - 1;
  return count_between(f.m, upper, lower, bound);
}

// C(n, k) with C(n, k) = 0 for n < k
inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---------------------------------------------------------------------------
// Graded joint-reduction test over GF(p) for homogeneous elements.
// W = J^{n0} I^n num must equal sum_x x W_x + den in every degree up to the
// largest generator degree of W.

struct Element {
  std::map<Exps, std::int64_t> terms;
  std::size_t coord;  // 0 for J, i for I_i
};

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::int64_t iv = inv_mod((rows[rank][c] % p + p) % p, p);
    for (auto& v : rows[rank]) v = (v % p + p) % p * iv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      std::int64_t fct = (rows[r][c] % p + p) % p;
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - fct * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline bool graded_reduction_at(const Family& f, const Gens& num, const Gens& den, const std::vector<Element>& xs,
                                const std::vector<int>& n, std::int64_t p) {
  Gens w = product(power(f.j, n[0], f.m), rees(f, n, num));
  const int top = max_deg(w);
  for (int d = 0; d <= top; ++d) {
    // monomials of degree d in W and not in den
    std::map<Exps, std::size_t> col;
    each_monomial(f.m, d, [&](const Exps& u) {
      if (deg(u) == d && member(u, w) && !member(u, den)) col.emplace(u, col.size());
    });
    if (col.empty()) continue;
    std::vector<std::vector<std::int64_t>> rows;
    for (const Element& x : xs) {
      std::vector<int> shifted = n;
      if (--shifted[x.coord] < 0) continue;
      Gens src = product(power(f.j, shifted[0], f.m), rees(f, shifted, num));
      int xd = deg(x.terms.begin()->first);
      each_monomial(f.m, d - xd, [&](const Exps& u) {
        if (deg(u) != d - xd || !member(u, src)) return;
        std::vector<std::int64_t> row(col.size(), 0);
        for (const auto& [t, c] : x.terms) {
          auto it = col.find(add(t, u));
          if (it != col.end()) row[it->second] = (row[it->second] + c) % p;
        }
        rows.push_back(row);
      });
    }
    if (rank_mod(rows, p) != col.size()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// random monomial ideals for property tests

inline Gens random_ideal(std::mt19937_64& rng, std::size_t m, int gens, int max_exp) {
  Gens g;
  std::uniform_int_distribution<int> e(0, max_exp);
  for (int i = 0; i < gens; ++i) {
    Exps x(m);
    for (auto& v : x) v = e(rng);
    g.push_back(x);
  }
  return g;
}

}  // namespace oracle

#endif
