#ifndef MIXMULT_LENGTH_HPP
#define MIXMULT_LENGTH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixmult/error.hpp"
#include "mixmult/monomial.hpp"

namespace mixmult {

// ---------------------------------------------------------------------------
// Standard-monomial counting

namespace detail {

// Number of monomials in the first `nv` variables outside the ideal generated
// by `gens` (restricted to those coordinates). The ideal must be primary to the
// maximal ideal of those variables.
inline std::uint64_t count_standard(const std::vector<const Monomial*>& gens, std::size_t nv) {
  for (const Monomial* g : gens) {
    bool all_zero = true;
    for (std::size_t i = 0; i < nv && all_zero; ++i) all_zero = (*g)[i] == 0;
    if (all_zero) return 0;
  }
  if (nv == 0) return 1;
  const std::size_t v = nv - 1;

  std::optional<Exponent> bound;
  for (const Monomial* g : gens) {
    bool pure = true;
    for (std::size_t i = 0; i < v && pure; ++i) pure = (*g)[i] == 0;
    if (pure && (!bound || (*g)[v] < *bound)) bound = (*g)[v];
  }
  if (!bound) throw InconsistencyError("count_standard: ideal is not primary to the maximal ideal");

  std::vector<Exponent> cuts{0};
  for (const Monomial* g : gens)
    if ((*g)[v] < *bound) cuts.push_back((*g)[v]);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(*bound);

  std::uint64_t total = 0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    std::vector<const Monomial*> slice;
    for (const Monomial* g : gens)
      if ((*g)[v] <= cuts[c]) slice.push_back(g);
    std::uint64_t width = cuts[c + 1] - cuts[c];
    total = checked::add(total, checked::mul(width, count_standard(slice, v)));
  }
  return total;
}

}  // namespace detail

// Number of monomials outside an m-primary monomial ideal.
inline std::uint64_t count_standard_monomials(const MonomialIdeal& k) {
  if (k.is_zero() && k.num_vars() > 0) throw InputError("the zero ideal has infinitely many standard monomials");
  std::vector<const Monomial*> gens;
  for (const Monomial& g : k.generators()) gens.push_back(&g);
  return detail::count_standard(gens, k.num_vars());
}

// Number of monomials lying in `a` but not in `c`, i.e. the length of
// (a + c)/c; nullopt when that is infinite.
inline std::optional<std::uint64_t> count_quotient(const MonomialIdeal& a, const MonomialIdeal& c) {
  require_same_ring(a, c);
  const std::size_t m = a.num_vars();
  std::vector<Exponent> box(m, 0);
  bool any = false;
  for (const Monomial& g : a.generators()) {
    MonomialIdeal k = ideal_colon(c, g);
    if (k.is_unit()) continue;
    any = true;
    for (std::size_t i = 0; i < m; ++i) {
      std::optional<Exponent> best;
      for (const Monomial& h : k.generators())
        if (auto e = h.pure_power_of(i); e && *e > 0 && (!best || *e < *best)) best = e;
      if (!best) return std::nullopt;
      box[i] = std::max(box[i], checked::add(g[i], *best));
    }
  }
  if (!any) return 0;
  // Every monomial of a outside c lies in the box, so capping both ideals by
  // the box walls leaves the difference unchanged.
  std::vector<Monomial> walls;
  for (std::size_t i = 0; i < m; ++i) walls.push_back(Monomial::variable(m, i, box[i]));
  MonomialIdeal capped_c = ideal_sum(c, MonomialIdeal(m, walls));
  MonomialIdeal capped_ac = ideal_sum(a, capped_c);
  return count_standard_monomials(capped_c) - count_standard_monomials(capped_ac);
}

// ---------------------------------------------------------------------------
// Modules

// The A-module num/den for monomial ideals den ⊆ num.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(MonomialIdeal num, MonomialIdeal den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_ring(num_, den_);
    if (!num_.contains(den_)) throw InputError("subquotient: denominator " + den_.to_string() + " is not inside numerator " + num_.to_string());
  }

  static Subquotient ring(std::size_t n) { return {MonomialIdeal::unit(n), MonomialIdeal::zero(n)}; }
  static Subquotient cyclic(const MonomialIdeal& den) { return {MonomialIdeal::unit(den.num_vars()), den}; }

  std::size_t num_vars() const { return num_.num_vars(); }
  const MonomialIdeal& num() const { return num_; }
  const MonomialIdeal& den() const { return den_; }
  bool is_zero() const { return den_.contains(num_); }

  // Ann(num/den) = den : num
  MonomialIdeal annihilator() const { return ideal_colon(den_, num_); }

  friend bool operator==(const Subquotient&, const Subquotient&) = default;

  std::string to_string(const std::vector<std::string>* names = nullptr) const {
    return num_.to_string(names) + "/" + den_.to_string(names);
  }

 private:
  MonomialIdeal num_;
  MonomialIdeal den_;
};

// Finite direct sum of subquotients over one ring; lengths and Hilbert
// functions are summed over the summands.
class DirectSum {
 public:
  DirectSum() = default;
  DirectSum(Subquotient s) : summands_{std::move(s)} {}  // NOLINT: implicit by intent
  explicit DirectSum(std::vector<Subquotient> s) : summands_(std::move(s)) {
    if (summands_.empty()) throw InputError("direct sum needs at least one summand");
    for (const Subquotient& q : summands_)
      if (q.num_vars() != summands_.front().num_vars()) throw InputError("direct sum summands over different rings");
  }

  static DirectSum copies(const Subquotient& s, std::size_t r) {
    if (r == 0) throw InputError("rank must be positive");
    return DirectSum(std::vector<Subquotient>(r, s));
  }

  const std::vector<Subquotient>& summands() const { return summands_; }
  std::size_t num_vars() const { return summands_.front().num_vars(); }

 private:
  std::vector<Subquotient> summands_;
};

// Length of num/den; nullopt when infinite.
inline std::optional<std::uint64_t> length(const Subquotient& m) { return count_quotient(m.num(), m.den()); }

// Dimension of num/den; nullopt stands for -infinity (the zero module).
inline std::optional<int> krull_dim(const Subquotient& m) { return quotient_dimension(m.annihilator()); }

inline std::optional<int> krull_dim(const DirectSum& m) {
  std::optional<int> best;
  for (const Subquotient& s : m.summands()) {
    auto d = krull_dim(s);
    if (d && (!best || *d > *best)) best = d;
  }
  return best;
}

// Length of M_p for a monomial prime p minimal over Ann(M): variables outside p
// become units, so only the p-coordinates of the generators survive.
inline std::uint64_t localized_length(const Subquotient& m, const VarSet& p) {
  MonomialIdeal ann = m.annihilator();
  if (ann.is_unit()) throw InputError("localized_length: zero module has no minimal primes");
  MinimalPrimes mp = minimal_primes(ann);
  VarSet sorted = p;
  std::sort(sorted.begin(), sorted.end());
  bool minimal = mp.zero_ideal ? sorted.empty()
                               : std::find(mp.primes.begin(), mp.primes.end(), sorted) != mp.primes.end();
  if (!minimal) throw InputError("localized_length: prime is not minimal over the annihilator");
  auto localize = [&](const MonomialIdeal& a) {
    std::vector<Monomial> g;
    for (const Monomial& x : a.generators()) g.push_back(x.restricted_to(sorted));
    return MonomialIdeal(a.num_vars(), std::move(g));
  };
  MonomialIdeal num = localize(m.num()), den = localize(m.den());
  // only monomials in the p-variables are counted
  std::vector<Monomial> others;
  for (std::size_t i = 0; i < m.num_vars(); ++i)
    if (!std::binary_search(sorted.begin(), sorted.end(), i)) others.push_back(Monomial::variable(m.num_vars(), i));
  auto count = count_quotient(num, ideal_sum(den, MonomialIdeal(m.num_vars(), others)));
  if (!count) throw InconsistencyError("localized_length: localization has infinite length");
  return *count;
}

// ---------------------------------------------------------------------------
// Ideal families and multidegrees

// Multi-index (c_0, c_1, ..., c_d); coordinate 0 belongs to J, the rest to I_1..I_d.
// Used both for multidegrees (n0, n) and for type indices (k0, k).
struct MultiIndex {
  std::vector<std::int64_t> c;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::int64_t> v) : c(std::move(v)) {}
  MultiIndex(std::initializer_list<std::int64_t> v) : c(v) {}
  static MultiIndex filled(std::size_t size, std::int64_t value) { return MultiIndex(std::vector<std::int64_t>(size, value)); }

  std::size_t size() const { return c.size(); }
  std::int64_t operator[](std::size_t i) const { return c[i]; }
  std::int64_t& operator[](std::size_t i) { return c[i]; }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto x : c) t = checked::add(t, x);
    return t;
  }

  // componentwise <=
  bool leq(const MultiIndex& o) const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] > o.c[i]) return false;
    return true;
  }
  // componentwise >= with strict inequality somewhere
  bool strictly_above(const MultiIndex& o) const { return o.leq(*this) && c != o.c; }

  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] = checked::add(a.c[i], b.c[i]);
    return a;
  }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] = checked::sub(a.c[i], b.c[i]);
    return a;
  }
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.c <=> b.c; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i == 1) s += ",(";
      else if (i) s += ",";
      s += std::to_string(c[i]);
    }
    if (c.size() > 1) s += ")";
    return s + ")";
  }
};

using MultiDegree = MultiIndex;
using TypeIndex = MultiIndex;

// Rectangular window [lo, hi] of multi-indices, iterated with the last
// coordinate fastest.
struct Box {
  MultiIndex lo, hi;

  std::size_t dims() const { return lo.size(); }

  std::size_t cell_count() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (hi[i] < lo[i]) return 0;
      n *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
    }
    return n;
  }

  bool contains(const MultiIndex& x) const { return lo.leq(x) && x.leq(hi); }

  std::size_t offset(const MultiIndex& x) const {
    std::size_t off = 0;
    for (std::size_t i = 0; i < lo.size(); ++i)
      off = off * static_cast<std::size_t>(hi[i] - lo[i] + 1) + static_cast<std::size_t>(x[i] - lo[i]);
    return off;
  }

  std::vector<MultiIndex> cells() const {
    std::vector<MultiIndex> out;
    if (cell_count() == 0) return out;
    MultiIndex cur = lo;
    while (true) {
      out.push_back(cur);
      std::size_t i = lo.size();
      while (i > 0) {
        --i;
        if (cur[i] < hi[i]) {
          ++cur[i];
          break;
        }
        cur[i] = lo[i];
        if (i == 0) return out;
      }
      if (lo.size() == 0) return out;
    }
  }
};

// J (m-primary) together with I_1, ..., I_d.
class IdealFamily {
 public:
  IdealFamily(MonomialIdeal j, std::vector<MonomialIdeal> ideals) : j_(std::move(j)), ideals_(std::move(ideals)) {
    if (ideals_.empty()) throw InputError("ideal family needs at least one ideal I_1");
    for (const MonomialIdeal& a : ideals_) require_same_ring(j_, a);
    if (!is_m_primary(j_)) throw InputError("J = " + j_.to_string() + " is not primary to the maximal ideal");
  }

  std::size_t num_vars() const { return j_.num_vars(); }
  std::size_t d() const { return ideals_.size(); }
  const MonomialIdeal& j() const { return j_; }
  const std::vector<MonomialIdeal>& ideals() const { return ideals_; }
  const MonomialIdeal& ideal(std::size_t i) const { return ideals_.at(i); }

  // The ideal of coordinate c: J for c = 0, I_c otherwise.
  const MonomialIdeal& coordinate_ideal(std::size_t c) const { return c == 0 ? j_ : ideals_.at(c - 1); }

  // I = I_1 ... I_d
  MonomialIdeal product() const {
    MonomialIdeal p = MonomialIdeal::unit(num_vars());
    for (const MonomialIdeal& a : ideals_) p = ideal_product(p, a);
    return p;
  }

  void require_module(const DirectSum& m) const {
    if (m.num_vars() != num_vars()) throw InputError("module and ideal family live in different rings");
  }

 private:
  MonomialIdeal j_;
  std::vector<MonomialIdeal> ideals_;
};

// Largest generator degree over the family and the module (at least 1).
inline Exponent input_degree(const IdealFamily& fam, const DirectSum& m) {
  Exponent g = std::max<Exponent>(1, fam.j().max_generator_degree());
  for (const MonomialIdeal& a : fam.ideals()) g = std::max(g, a.max_generator_degree());
  for (const Subquotient& s : m.summands()) g = std::max({g, s.num().max_generator_degree(), s.den().max_generator_degree()});
  return g;
}

// lo = 2g in every coordinate, hi = lo + max(4, m + 2): F has degree at most
// m, and fitting keeps two rows for verification.
inline Box default_window(const IdealFamily& fam, const std::vector<DirectSum>& modules) {
  Exponent g = 1;
  for (const DirectSum& m : modules) g = std::max(g, input_degree(fam, m));
  std::int64_t lo = 2 * static_cast<std::int64_t>(g);
  std::int64_t width = std::max<std::int64_t>(4, static_cast<std::int64_t>(fam.num_vars()) + 2);
  return Box{MultiIndex::filled(fam.d() + 1, lo), MultiIndex::filled(fam.d() + 1, lo + width)};
}

inline Box default_window(const IdealFamily& fam, const DirectSum& m) {
  return default_window(fam, std::vector<DirectSum>{m});
}

// Powers J^a, I_i^b and products I^n * num, memoized for one family.
class PowerCache {
 public:
  explicit PowerCache(const IdealFamily& fam) : fam_(fam) {}

  const MonomialIdeal& power(std::size_t coord, std::size_t e) {
    auto& v = powers_[coord];
    if (v.empty()) v.push_back(MonomialIdeal::unit(fam_.num_vars()));
    while (v.size() <= e) v.push_back(ideal_product(v.back(), fam_.coordinate_ideal(coord)));
    return v[e];
  }

  // I^n (coordinates 1..d of the index); coordinate 0 is ignored
  const MonomialIdeal& rees_power(const MultiIndex& idx) {
    std::vector<std::int64_t> key(idx.c.begin() + 1, idx.c.end());
    auto it = rees_.find(key);
    if (it != rees_.end()) return it->second;
    MonomialIdeal p = MonomialIdeal::unit(fam_.num_vars());
    for (std::size_t i = 1; i < idx.size(); ++i) p = ideal_product(p, power(i, static_cast<std::size_t>(idx[i])));
    return rees_.emplace(std::move(key), std::move(p)).first->second;
  }

  // J^{n0} I^n a
  MonomialIdeal full(const MultiIndex& idx, const MonomialIdeal& a) {
    if (idx[0] < 0) return MonomialIdeal::zero(fam_.num_vars());
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (idx[i] < 0) return MonomialIdeal::zero(fam_.num_vars());
    return ideal_product(ideal_product(power(0, static_cast<std::size_t>(idx[0])), rees_power(idx)), a);
  }

  // I^n a
  MonomialIdeal rees(const MultiIndex& idx, const MonomialIdeal& a) {
    for (std::size_t i = 1; i < idx.size(); ++i)
      if (idx[i] < 0) return MonomialIdeal::zero(fam_.num_vars());
    return ideal_product(rees_power(idx), a);
  }

  const IdealFamily& family() const { return fam_; }

 private:
  const IdealFamily& fam_;
  std::map<std::size_t, std::vector<MonomialIdeal>> powers_;
  std::map<std::vector<std::int64_t>, MonomialIdeal> rees_;
};

// ---------------------------------------------------------------------------
// Hilbert tables

enum class HilbertFunction { P, F };

inline std::string to_string(HilbertFunction f) { return f == HilbertFunction::P ? "P" : "F"; }

struct HilbertTable {
  Box window;
  std::vector<std::int64_t> values;  // row-major over window.cells()
  std::string label;

  std::int64_t at(const MultiIndex& x) const {
    if (!window.contains(x)) throw InputError("cell " + x.to_string() + " outside the table window");
    return values[window.offset(x)];
  }
};

inline void require_window(const IdealFamily& fam, const Box& window) {
  if (window.lo.size() != fam.d() + 1 || window.hi.size() != fam.d() + 1)
    throw InputError("window must have " + std::to_string(fam.d() + 1) + " coordinates (n0, n_1..n_d)");
  for (std::size_t i = 0; i < window.lo.size(); ++i) {
    if (window.lo[i] < 0) throw InputError("window coordinates must be nonnegative");
    if (window.hi[i] < window.lo[i]) throw InputError("window has hi < lo in coordinate " + std::to_string(i));
  }
}

// Single cell of P: length of J^{n0} I^n M / J^{n0+1} I^n M.
inline std::int64_t hilbert_p_value(PowerCache& cache, const DirectSum& m, const MultiDegree& deg) {
  std::int64_t total = 0;
  for (const Subquotient& s : m.summands()) {
    MonomialIdeal upper = cache.full(deg, s.num());
    MonomialIdeal lower = ideal_product(cache.family().j(), upper);
    auto len = count_quotient(upper, ideal_sum(lower, s.den()));
    if (!len) throw InconsistencyError("P value infinite at " + deg.to_string() + ": J is not m-primary?");
    total = checked::add(total, static_cast<std::int64_t>(*len));
  }
  return total;
}

// Single cell of F: length of I^n M / J^{n0} I^n M.
inline std::int64_t hilbert_f_value(PowerCache& cache, const DirectSum& m, const MultiDegree& deg) {
  std::int64_t total = 0;
  for (const Subquotient& s : m.summands()) {
    MonomialIdeal upper = cache.rees(deg, s.num());
    MonomialIdeal lower = ideal_product(cache.power(0, static_cast<std::size_t>(deg[0])), upper);
    auto len = count_quotient(upper, ideal_sum(lower, s.den()));
    if (!len) throw InconsistencyError("F value infinite at " + deg.to_string());
    total = checked::add(total, static_cast<std::int64_t>(*len));
  }
  return total;
}

inline HilbertTable hilbert_table(const IdealFamily& fam, const DirectSum& m, const Box& window, HilbertFunction fn) {
  require_window(fam, window);
  fam.require_module(m);
  PowerCache cache(fam);
  HilbertTable t{window, {}, to_string(fn)};
  for (const MultiIndex& cell : window.cells())
    t.values.push_back(fn == HilbertFunction::P ? hilbert_p_value(cache, m, cell) : hilbert_f_value(cache, m, cell));
  return t;
}

inline HilbertTable hilbert_P(const IdealFamily& fam, const DirectSum& m, const Box& window) {
  return hilbert_table(fam, m, window, HilbertFunction::P);
}

inline HilbertTable hilbert_F(const IdealFamily& fam, const DirectSum& m, const Box& window) {
  return hilbert_table(fam, m, window, HilbertFunction::F);
}

// ---------------------------------------------------------------------------
// Saturation

struct Saturation {
  Subquotient mbar;        // M / 0_M : I^infinity
  std::optional<int> q;    // dim of mbar; nullopt is -infinity
};

inline Saturation saturate_module(const Subquotient& m, const IdealFamily& fam) {
  MonomialIdeal sat = colon_saturate(m.den(), fam.product());
  Subquotient mbar(m.num(), ideal_intersection(sat, m.num()));
  return {mbar, krull_dim(mbar)};
}

// q for a direct sum is the largest summand dimension.
inline std::optional<int> saturated_dimension(const DirectSum& m, const IdealFamily& fam) {
  std::optional<int> best;
  for (const Subquotient& s : m.summands()) {
    auto q = saturate_module(s, fam).q;
    if (q && (!best || *q > *best)) best = q;
  }
  return best;
}

}  // namespace mixmult

#endif  // MIXMULT_LENGTH_HPP
