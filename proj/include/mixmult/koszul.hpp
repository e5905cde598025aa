#ifndef MIXMULT_KOSZUL_HPP
#define MIXMULT_KOSZUL_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixmult/error.hpp"
#include "mixmult/hilbert_fit.hpp"
#include "mixmult/length.hpp"
#include "mixmult/linalg.hpp"
#include "mixmult/reductions.hpp"
#include "mixmult/truncation.hpp"

namespace mixmult {

struct HomologyReport {
  MultiDegree degree;
  std::vector<std::int64_t> lengths;  // l(H_0), ..., l(H_p)
  std::vector<Exponent> levels;       // truncation levels tried
  bool stable = false;
  std::int64_t euler = 0;
};

namespace detail {

// Koszul complex of the Rees module at one multidegree, cut off by internal
// degree: the component of a subset S lives below D - sum of the orders of its
// elements, which makes the cut a quotient complex.
template <typename Field>
class KoszulSlice {
 public:
  KoszulSlice(const Field& f, const std::vector<std::pair<std::size_t, const Polynomial<Field>*>>& xs, PowerCache& cache,
              const DirectSum& m, const MultiDegree& deg, Exponent bound)
      : f_(f), xs_(xs) {
    const std::size_t n = xs.size();
    if (n > 20) throw InputError("too many candidate elements for a Koszul complex");
    for (const auto& [coord, x] : xs) {
      auto o = x->order();
      if (!o) throw InputError("zero element in a Koszul candidate");
      orders_.push_back(*o);
    }
    comps_.resize(std::size_t{1} << n);
    for (std::uint32_t s = 0; s < comps_.size(); ++s) {
      MultiDegree shifted = deg;
      Exponent drop = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (s >> j & 1) {
          --shifted[xs[j].first];
          drop += orders_[j];
        }
      bool live = true;
      for (std::size_t c = 0; c < shifted.size(); ++c) live = live && shifted[c] >= 0;
      Component& comp = comps_[s];
      if (!live || drop >= bound) continue;
      for (const Subquotient& q : m.summands()) comp.pieces.emplace_back(cache.rees(shifted, q.num()), q.den(), bound - drop);
      std::size_t off = 0;
      for (const auto& p : comp.pieces) {
        comp.offsets.push_back(off);
        off += p.size();
      }
      comp.dim = off;
    }
  }

  std::size_t dim(std::size_t p) const {
    std::size_t total = 0;
    for (std::uint32_t s = 0; s < comps_.size(); ++s)
      if (static_cast<std::size_t>(std::popcount(s)) == p) total += comps_[s].dim;
    return total;
  }

  // rank of d_p : K_p -> K_{p-1}
  std::size_t rank(std::size_t p) const {
    if (p == 0 || p > xs_.size()) return 0;
    std::vector<std::size_t> target_offset(comps_.size(), 0);
    std::size_t cols = 0;
    for (std::uint32_t s = 0; s < comps_.size(); ++s)
      if (static_cast<std::size_t>(std::popcount(s)) == p - 1) {
        target_offset[s] = cols;
        cols += comps_[s].dim;
      }
    if (cols == 0) return 0;
    RowEchelon<Field> ech(f_, cols);
    for (std::uint32_t s = 0; s < comps_.size() && !ech.full(); ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) != p) continue;
      const Component& src = comps_[s];
      for (std::size_t q = 0; q < src.pieces.size(); ++q)
        for (const Monomial& u : src.pieces[q].basis()) {
          SparseVector<Field> row;
          int sign = 1;
          for (std::size_t j = 0; j < xs_.size(); ++j) {
            if (!(s >> j & 1)) continue;
            std::uint32_t t = s & ~(std::uint32_t{1} << j);
            const Component& dst = comps_[t];
            if (dst.dim) {
              for (auto [col, val] : multiply_into(f_, *xs_[j].second, u, dst.pieces[q])) {
                if (sign < 0) val = f_.neg(val);
                row.emplace_back(target_offset[t] + dst.offsets[q] + col, val);
              }
            }
            sign = -sign;
          }
          ech.insert(row);
          if (ech.full()) break;
        }
    }
    return ech.rank();
  }

 private:
  struct Component {
    std::vector<TruncatedPiece> pieces;  // one per summand
    std::vector<std::size_t> offsets;
    std::size_t dim = 0;
  };

  const Field& f_;
  std::vector<std::pair<std::size_t, const Polynomial<Field>*>> xs_;
  std::vector<Exponent> orders_;
  std::vector<Component> comps_;
};

template <typename Field>
std::vector<std::int64_t> koszul_lengths(const Field& f, const ReductionCandidate<Field>& c, PowerCache& cache,
                                         const DirectSum& m, const MultiDegree& deg, Exponent bound) {
  auto xs = c.ordered();
  KoszulSlice<Field> slice(f, xs, cache, m, deg, bound);
  const std::size_t n = xs.size();
  std::vector<std::size_t> ranks(n + 2, 0);
  for (std::size_t p = 1; p <= n; ++p) ranks[p] = slice.rank(p);
  std::vector<std::int64_t> h;
  for (std::size_t p = 0; p <= n; ++p)
    h.push_back(static_cast<std::int64_t>(slice.dim(p) - ranks[p] - ranks[p + 1]));
  return h;
}

}  // namespace detail

// Starting truncation: g * (k0 + |k| + 2 + |n|), g the largest input degree.
inline Exponent default_koszul_truncation(const IdealFamily& fam, const DirectSum& m, const JointType& t,
                                          const MultiDegree& deg) {
  std::int64_t n = 0;
  for (std::size_t i = 1; i < deg.size(); ++i) n += std::max<std::int64_t>(deg[i], 0);
  return input_degree(fam, m) * static_cast<Exponent>(t.size() + 1 + n);
}

// Homology lengths at `deg`, raising the truncation by 2 until two
// consecutive levels agree or `levels` have been tried.
template <typename Field>
HomologyReport koszul_homology(const Field& f, const ReductionCandidate<Field>& c, const IdealFamily& fam,
                               const DirectSum& m, const MultiDegree& deg, std::optional<Exponent> start = std::nullopt,
                               int levels = 4) {
  validate_candidate(c, fam);
  fam.require_module(m);
  if (deg.size() != fam.d() + 1) throw InputError("multidegree has wrong length");
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] < 0) throw InputError("multidegree must be nonnegative");
  PowerCache cache(fam);
  Exponent bound = start.value_or(default_koszul_truncation(fam, m, c.type(), deg));
  HomologyReport r{deg, {}, {}, false, 0};
  std::vector<std::int64_t> prev;
  for (int level = 0; level < levels; ++level, bound += 2) {
    std::vector<std::int64_t> h = detail::koszul_lengths(f, c, cache, m, deg, bound);
    r.levels.push_back(bound);
    r.lengths = h;
    if (level > 0 && h == prev) {
      r.stable = true;
      break;
    }
    prev = std::move(h);
  }
  for (std::size_t p = 0; p < r.lengths.size(); ++p) r.euler += (p % 2 ? -1 : 1) * r.lengths[p];
  return r;
}

struct ChiOracle {
  Constancy status = Constancy::window_too_small;
  std::optional<std::int64_t> value;
  std::string diagnostic;
};

// The (j, k)-difference of the fitted F, j the number of J elements.
inline ChiOracle chi_oracle(const JointType& t, const IdealFamily& fam, const DirectSum& m, const Box& window) {
  HilbertTable table = hilbert_F(fam, m, window);
  BinomialFit fit = fit_binomial(table);
  if (!fit.certificate.stable) throw RefusedError("F fit is not stable on the window; widen it");
  ConstancyReport c = constant_difference(table, fit, t.f_order());
  return {c.status, c.value, c.diagnostic};
}

struct ChiOptions {
  std::optional<Box> window;
  bool validate = false;  // cross-check with Koszul homology
  std::optional<Exponent> truncation;
};

struct ChiResult {
  std::int64_t value = 0;
  std::vector<HomologyReport> validations;
  std::vector<std::string> diagnostics;
};

template <typename Field>
ChiResult chi(const Field& f, const ReductionCandidate<Field>& c, const IdealFamily& fam, const DirectSum& m,
              const ChiOptions& opt = {}) {
  Box window = opt.window.value_or(default_window(fam, m));
  ReductionCertificate cert = is_joint_reduction(f, c, fam, m, window);
  if (!cert.holds) throw InputError("chi needs a joint reduction; candidate " + cert.verdict());
  ChiOracle o = chi_oracle(c.type(), fam, m, window);
  if (o.status == Constancy::not_constant)
    throw InconsistencyError("joint reduction verified but the F difference is not constant; window too shallow?");
  if (o.status == Constancy::window_too_small) throw RefusedError("chi: " + o.diagnostic);
  ChiResult r{*o.value, {}, {}};
  if (opt.validate) {
    for (std::int64_t back = 0; back < 2; ++back) {
      MultiDegree deg = window.hi - MultiIndex::filled(window.dims(), back);
      HomologyReport h = koszul_homology(f, c, fam, m, deg, opt.truncation);
      if (!h.stable) r.diagnostics.push_back("Koszul homology at " + deg.to_string() + " did not stabilize");
      else if (h.euler != r.value)
        throw InconsistencyError("Koszul euler " + std::to_string(h.euler) + " at " + deg.to_string() +
                                 " differs from the difference of F, " + std::to_string(r.value));
      r.validations.push_back(std::move(h));
    }
  }
  return r;
}

enum class GfOutcome { holds, fails, insufficient_depth };

inline std::string to_string(GfOutcome g) {
  switch (g) {
    case GfOutcome::holds: return "holds";
    case GfOutcome::fails: return "fails";
    default: return "insufficient_depth";
  }
}

struct GfCheck {
  GfOutcome outcome = GfOutcome::insufficient_depth;
  std::vector<std::pair<MultiDegree, std::int64_t>> cells;  // cell, euler
  std::optional<MultiDegree> failing_cell;
  std::vector<std::string> diagnostics;
};

// At each cell x with x - (j, k) still in the window, the alternating binomial
// combination of F values must equal the Koszul euler characteristic.
template <typename Field>
GfCheck generating_function_check(const Field& f, const ReductionCandidate<Field>& c, const IdealFamily& fam,
                                  const DirectSum& m, const Box& window, std::optional<Exponent> truncation = std::nullopt) {
  validate_candidate(c, fam);
  require_window(fam, window);
  GfCheck g;
  MultiIndex order = c.type().f_order();
  bool deep = true;
  for (std::size_t i = 0; i < order.size(); ++i) deep = deep && window.lo[i] + order[i] <= window.hi[i];
  if (!deep) {
    g.diagnostics.push_back("window has no cell at depth " + order.to_string());
    return g;
  }
  HilbertTable table = hilbert_F(fam, m, window);
  HilbertTable diff = difference(table, order);
  std::size_t checked_cells = 0;
  for (const MultiDegree& cell : diff.window.cells()) {
    bool positive = true;
    for (std::size_t i = 0; i < cell.size(); ++i) positive = positive && cell[i] >= 1;
    if (!positive) continue;
    HomologyReport h = koszul_homology(f, c, fam, m, cell, truncation);
    if (!h.stable) {
      g.diagnostics.push_back("Koszul homology at " + cell.to_string() + " did not stabilize; skipped");
      continue;
    }
    ++checked_cells;
    g.cells.emplace_back(cell, h.euler);
    if (h.euler != diff.at(cell)) {
      g.outcome = GfOutcome::fails;
      g.failing_cell = cell;
      g.diagnostics.push_back("at " + cell.to_string() + ": euler " + std::to_string(h.euler) + ", F combination " +
                              std::to_string(diff.at(cell)));
      return g;
    }
  }
  g.outcome = checked_cells ? GfOutcome::holds : GfOutcome::insufficient_depth;
  return g;
}

}  // namespace mixmult

#endif  // MIXMULT_KOSZUL_HPP
