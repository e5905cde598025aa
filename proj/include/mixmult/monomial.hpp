#ifndef MIXMULT_MONOMIAL_HPP
#define MIXMULT_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mixmult/checked.hpp"
#include "mixmult/error.hpp"

namespace mixmult {

using Exponent = std::uint64_t;

// Exponent vector of a monomial x_1^{e_1} ... x_m^{e_m}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial variable(std::size_t num_vars, std::size_t i, Exponent power = 1) {
    Monomial m(num_vars);
    m.exps_.at(i) = power;
    return m;
  }

  std::size_t num_vars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  Exponent degree() const {
    Exponent d = 0;
    for (Exponent e : exps_) d = checked::add(d, e);
    return d;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) s.push_back(i);
    return s;
  }

  // If this is x_i^a with a >= 0 for a single i (or 1), returns that i's exponent.
  std::optional<Exponent> pure_power_of(std::size_t i) const {
    for (std::size_t j = 0; j < exps_.size(); ++j)
      if (j != i && exps_[j] != 0) return std::nullopt;
    return exps_[i];
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.num_vars());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = checked::add(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.num_vars());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.num_vars());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
  }

  // a / gcd(a, b): the generator of the principal colon (a) : b.
  friend Monomial colon(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.num_vars());
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] - b.exps_[i] : 0;
    return r;
  }

  // Sets the exponents of variables outside `keep` to zero (localization at a
  // monomial prime makes those variables units).
  Monomial restricted_to(const std::vector<std::size_t>& keep) const {
    Monomial r(num_vars());
    for (std::size_t i : keep) r.exps_[i] = exps_[i];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

  std::string to_string(const std::vector<std::string>* names = nullptr) const {
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += names ? (*names)[i] : "x" + std::to_string(i + 1);
      if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  static void check_same(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars()) throw InputError("monomials over rings of different size");
  }

  std::vector<Exponent> exps_;
};

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

// Graded lexicographic order, used only for canonical printing.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  Exponent da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exponents() > b.exponents();
}

// Sorted list of variable indices; the monomial prime (x_i : i in set).
using VarSet = std::vector<std::size_t>;

// Ideal of k[x_1..x_m] generated by monomials, stored by its minimal generators.
// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t num_vars = 0) : nvars_(num_vars) {}

  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens) : nvars_(num_vars) {
    for (const Monomial& g : gens)
      if (g.num_vars() != nvars_) throw InputError("generator length does not match the number of variables");
    gens_ = minimalize(std::move(gens));
  }

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial(n)}); }
  static MonomialIdeal prime(std::size_t n, const VarSet& vars) {
    std::vector<Monomial> g;
    for (std::size_t i : vars) g.push_back(Monomial::variable(n, i));
    return MonomialIdeal(n, std::move(g));
  }
  static MonomialIdeal maximal(std::size_t n) {
    VarSet all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return prime(n, all);
  }

  std::size_t num_vars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const {
    if (m.num_vars() != nvars_) throw InputError("monomial length does not match the ideal's ring");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  bool contains(const MonomialIdeal& other) const {
    require_same_ring(*this, other);
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
  }

  bool is_minimal_generator(const Monomial& m) const {
    return std::binary_search(gens_.begin(), gens_.end(), m, grlex_greater);
  }

  Exponent max_generator_degree() const {
    Exponent d = 0;
    for (const Monomial& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  std::string to_string(const std::vector<std::string>* names = nullptr) const {
    if (is_zero()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].to_string(names);
    }
    return s + ")";
  }

  friend void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars_ != b.nvars_) throw InputError("ideals live in rings with different numbers of variables");
  }

 private:
  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      Exponent da = a.degree(), db = b.degree();
      return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (Monomial& g : gens) {
      bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
      if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end(), grlex_greater);
    return kept;
  }

  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& a) { return os << a.to_string(); }

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.num_vars(), std::move(g));
}

inline MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> g;
  g.reserve(a.size() * b.size());
  for (const Monomial& x : a.generators())
    for (const Monomial& y : b.generators()) g.push_back(x * y);
  return MonomialIdeal(a.num_vars(), std::move(g));
}

inline MonomialIdeal ideal_product(const MonomialIdeal& a, const Monomial& m) {
  std::vector<Monomial> g;
  g.reserve(a.size());
  for (const Monomial& x : a.generators()) g.push_back(x * m);
  return MonomialIdeal(a.num_vars(), std::move(g));
}

inline MonomialIdeal ideal_power(const MonomialIdeal& a, std::size_t n) {
  MonomialIdeal r = MonomialIdeal::unit(a.num_vars());
  for (std::size_t i = 0; i < n; ++i) r = ideal_product(r, a);
  return r;
}

inline MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> g;
  g.reserve(a.size() * b.size());
  for (const Monomial& x : a.generators())
    for (const Monomial& y : b.generators()) g.push_back(lcm(x, y));
  return MonomialIdeal(a.num_vars(), std::move(g));
}

// a : (m)
inline MonomialIdeal ideal_colon(const MonomialIdeal& a, const Monomial& m) {
  std::vector<Monomial> g;
  g.reserve(a.size());
  for (const Monomial& x : a.generators()) g.push_back(colon(x, m));
  return MonomialIdeal(a.num_vars(), std::move(g));
}

// a : b. The colon by the zero ideal is the unit ideal.
inline MonomialIdeal ideal_colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  MonomialIdeal r = MonomialIdeal::unit(a.num_vars());
  for (const Monomial& g : b.generators()) {
    r = ideal_intersection(r, ideal_colon(a, g));
    if (r == a) break;  // cannot shrink below a
  }
  return r;
}

// a : b^infinity, the stabilized colon chain.
inline MonomialIdeal colon_saturate(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  MonomialIdeal cur = a;
  while (true) {
    MonomialIdeal next = ideal_colon(cur, b);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

struct MinimalPrimes {
  std::vector<VarSet> primes;
  bool zero_ideal = false;  // the ideal was (0): its only minimal prime is (0) itself
};

// Minimal primes of a proper monomial ideal: minimal variable sets meeting the
// support of every generator.
inline MinimalPrimes minimal_primes(const MonomialIdeal& a) {
  if (a.is_unit()) throw InputError("minimal_primes: the unit ideal has no primes");
  MinimalPrimes out;
  if (a.is_zero()) {
    out.zero_ideal = true;
    return out;
  }
  std::vector<VarSet> supports;
  for (const Monomial& g : a.generators()) supports.push_back(g.support());
  // shorter supports first keeps the branching small
  std::sort(supports.begin(), supports.end(),
            [](const VarSet& x, const VarSet& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });

  std::vector<VarSet> covers;
  VarSet chosen;
  auto recurse = [&](auto&& self, std::size_t idx) -> void {
    while (idx < supports.size()) {
      const VarSet& s = supports[idx];
      bool hit = std::any_of(s.begin(), s.end(),
                             [&](std::size_t v) { return std::binary_search(chosen.begin(), chosen.end(), v); });
      if (!hit) break;
      ++idx;
    }
    if (idx == supports.size()) {
      covers.push_back(chosen);
      return;
    }
    for (std::size_t v : supports[idx]) {
      chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), v), v);
      self(self, idx + 1);
      chosen.erase(std::find(chosen.begin(), chosen.end(), v));
    }
  };
  recurse(recurse, 0);

  std::sort(covers.begin(), covers.end(),
            [](const VarSet& x, const VarSet& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  for (const VarSet& c : covers) {
    bool has_subset = std::any_of(out.primes.begin(), out.primes.end(), [&](const VarSet& p) {
      return std::includes(c.begin(), c.end(), p.begin(), p.end());
    });
    if (!has_subset) out.primes.push_back(c);
  }
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

// True when the radical of a is the maximal ideal (x_1, ..., x_m).
inline bool is_m_primary(const MonomialIdeal& a) {
  if (a.is_unit() || a.is_zero()) return false;
  MinimalPrimes mp = minimal_primes(a);
  return mp.primes.size() == 1 && mp.primes.front().size() == a.num_vars();
}

// Krull dimension of A/a; nullopt stands for -infinity (a is the unit ideal).
inline std::optional<int> quotient_dimension(const MonomialIdeal& a) {
  if (a.is_unit()) return std::nullopt;
  const int m = static_cast<int>(a.num_vars());
  MinimalPrimes mp = minimal_primes(a);
  if (mp.zero_ideal) return m;
  std::size_t smallest = a.num_vars();
  for (const VarSet& p : mp.primes) smallest = std::min(smallest, p.size());
  return m - static_cast<int>(smallest);
}

}  // namespace mixmult

#endif  // MIXMULT_MONOMIAL_HPP
