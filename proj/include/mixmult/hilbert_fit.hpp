#ifndef MIXMULT_HILBERT_FIT_HPP
#define MIXMULT_HILBERT_FIT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixmult/checked.hpp"
#include "mixmult/error.hpp"
#include "mixmult/length.hpp"

namespace mixmult {

// Polynomial in the basis C(n0+k0, k0) * prod_i C(n_i+k_i, k_i); only nonzero
// coefficients are stored.
class BinomialPoly {
 public:
  BinomialPoly() = default;
  explicit BinomialPoly(std::size_t dims) : dims_(dims) {}

  std::size_t dims() const { return dims_; }
  const std::map<TypeIndex, std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  std::int64_t coeff(const TypeIndex& t) const {
    auto it = coeffs_.find(t);
    return it == coeffs_.end() ? 0 : it->second;
  }

  void set(const TypeIndex& t, std::int64_t v) {
    if (t.size() != dims_) throw InputError("type index has wrong length");
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] < 0) throw InputError("type index must be nonnegative");
    if (v == 0) coeffs_.erase(t);
    else coeffs_[t] = v;
  }

  std::int64_t evaluate(const MultiDegree& n) const {
    if (n.size() != dims_) throw InputError("evaluation point has wrong length");
    std::int64_t total = 0;
    for (const auto& [t, e] : coeffs_) {
      std::int64_t term = e;
      for (std::size_t i = 0; i < dims_; ++i) term = checked::mul(term, checked::binomial(checked::add(n[i], t[i]), t[i]));
      total = checked::add(total, term);
    }
    return total;
  }

  // Total degree; nullopt for the zero polynomial (degree -infinity).
  std::optional<std::int64_t> total_degree() const {
    std::optional<std::int64_t> d;
    for (const auto& [t, e] : coeffs_)
      if (!d || t.total() > *d) d = t.total();
    return d;
  }

  friend bool operator==(const BinomialPoly&, const BinomialPoly&) = default;

 private:
  std::size_t dims_ = 0;
  std::map<TypeIndex, std::int64_t> coeffs_;
};

// ∆ C(n+k, k) = C(n+k-1, k-1), so differencing just shifts the index down.
inline BinomialPoly difference(const BinomialPoly& p, const TypeIndex& t) {
  if (t.size() != p.dims()) throw InputError("type index has wrong length");
  BinomialPoly out(p.dims());
  for (const auto& [s, e] : p.coeffs())
    if (t.leq(s)) out.set(s - t, e);
  return out;
}

namespace detail {

// ∆^t f at x, reading f through `value`
template <typename Get>
std::int64_t backward_difference_at(const MultiIndex& x, const TypeIndex& t, Get&& value) {
  Box steps{MultiIndex::filled(t.size(), 0), t};
  std::int64_t total = 0;
  for (const MultiIndex& j : steps.cells()) {
    std::int64_t w = 1;
    for (std::size_t i = 0; i < t.size(); ++i) w = checked::mul(w, checked::binomial(t[i], j[i]));
    if (j.total() % 2) w = -w;
    total = checked::add(total, checked::mul(w, value(x - j)));
  }
  return total;
}

}  // namespace detail

// Iterated backward difference of a table; defined on cells x with x - t still
// inside the window.
inline HilbertTable difference(const HilbertTable& table, const TypeIndex& t) {
  const Box& w = table.window;
  if (t.size() != w.dims()) throw InputError("type index has wrong length for the table");
  std::string deficit;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0) throw InputError("type index must be nonnegative");
    std::int64_t width = w.hi[i] - w.lo[i];
    if (t[i] > width)
      deficit += (deficit.empty() ? "" : ", ") + std::string("coordinate ") + std::to_string(i) + " needs " +
                 std::to_string(t[i] + 1) + " cells, has " + std::to_string(width + 1);
  }
  if (!deficit.empty()) throw InputError("window too small for difference " + t.to_string() + ": " + deficit);
  Box valid{w.lo + t, w.hi};
  HilbertTable out{valid, {}, "D" + t.to_string() + " " + table.label};
  for (const MultiIndex& x : valid.cells())
    out.values.push_back(detail::backward_difference_at(x, t, [&](const MultiIndex& y) { return table.at(y); }));
  return out;
}

struct FittingCertificate {
  Box fit_window;
  std::vector<MultiIndex> verification_points;
  bool stable = false;
  std::optional<std::int64_t> max_total_degree;
  std::vector<std::string> mismatches;
};

struct BinomialFit {
  BinomialPoly poly;
  FittingCertificate certificate;
};

// Interpolates on the window minus `margin` cells at the top of every
// coordinate, then checks the polynomial against every cell of the window.
inline BinomialFit fit_binomial(const HilbertTable& table, std::int64_t margin = 2) {
  const Box& w = table.window;
  const std::size_t dims = w.dims();
  for (std::size_t i = 0; i < dims; ++i)
    if (w.hi[i] - w.lo[i] < margin)
      throw InputError("window too small to fit: coordinate " + std::to_string(i) + " needs at least " +
                       std::to_string(margin + 1) + " cells");

  Box fit{w.lo, w.hi - MultiIndex::filled(dims, margin)};
  const MultiIndex& top = fit.hi;
  MultiIndex width = fit.hi - fit.lo;

  std::vector<TypeIndex> order = Box{MultiIndex::filled(dims, 0), width}.cells();
  std::stable_sort(order.begin(), order.end(), [](const TypeIndex& a, const TypeIndex& b) {
    if (a.total() != b.total()) return a.total() > b.total();
    return a < b;
  });

  BinomialPoly p(dims);
  for (const TypeIndex& t : order) {
    std::int64_t v = detail::backward_difference_at(top, t, [&](const MultiIndex& y) { return table.at(y); });
    for (const auto& [s, e] : p.coeffs()) {
      if (!s.strictly_above(t)) continue;
      std::int64_t term = e;
      for (std::size_t i = 0; i < dims; ++i)
        term = checked::mul(term, checked::binomial(checked::add(top[i], s[i] - t[i]), s[i] - t[i]));
      v = checked::sub(v, term);
    }
    p.set(t, v);
  }

  FittingCertificate cert{fit, {}, true, p.total_degree(), {}};
  for (const MultiIndex& x : w.cells()) {
    if (!fit.contains(x)) cert.verification_points.push_back(x);
    std::int64_t expect = table.at(x), got = p.evaluate(x);
    if (expect != got) {
      cert.stable = false;
      cert.mismatches.push_back("at " + x.to_string() + ": table " + std::to_string(expect) + ", polynomial " +
                                std::to_string(got));
    }
  }
  return {std::move(p), std::move(cert)};
}

// The coefficient at t when every coefficient strictly above t vanishes.
inline std::optional<std::int64_t> mixed_mult_maximal(const BinomialPoly& p, const TypeIndex& t) {
  if (t.size() != p.dims()) throw InputError("type index has wrong length");
  for (const auto& [s, e] : p.coeffs())
    if (s.strictly_above(t)) return std::nullopt;
  return p.coeff(t);
}

inline std::optional<std::int64_t> mixed_mult_maximal(const BinomialFit& f, const TypeIndex& t) {
  if (!f.certificate.stable) throw RefusedError("fit is not stable on the window; widen it");
  return mixed_mult_maximal(f.poly, t);
}

// Defined mixed multiplicities of maximal degree inside [0, S], S the
// componentwise max of the support. Types outside that box are defined with
// value 0.
inline std::vector<std::pair<TypeIndex, std::int64_t>> maximal_support(const BinomialPoly& p) {
  MultiIndex cap = MultiIndex::filled(p.dims(), 0);
  for (const auto& [s, e] : p.coeffs())
    for (std::size_t i = 0; i < s.size(); ++i) cap[i] = std::max(cap[i], s[i]);
  std::vector<std::pair<TypeIndex, std::int64_t>> out;
  for (const TypeIndex& t : Box{MultiIndex::filled(p.dims(), 0), cap}.cells())
    if (auto v = mixed_mult_maximal(p, t)) out.emplace_back(t, *v);
  return out;
}

inline std::vector<std::pair<TypeIndex, std::int64_t>> maximal_support(const BinomialFit& f) {
  if (!f.certificate.stable) throw RefusedError("fit is not stable on the window; widen it");
  return maximal_support(f.poly);
}

enum class Constancy { constant, not_constant, window_too_small };

inline std::string to_string(Constancy c) {
  switch (c) {
    case Constancy::constant: return "constant";
    case Constancy::not_constant: return "not_constant";
    default: return "window_too_small";
  }
}

struct ConstancyReport {
  Constancy status = Constancy::window_too_small;
  std::optional<std::int64_t> value;
  std::string diagnostic;
};

// Whether ∆^t of the tabulated function is constant. The table cells and the
// fitted coefficients have to agree; otherwise the window cannot decide.
inline ConstancyReport constant_difference(const HilbertTable& table, const BinomialFit& fit, const TypeIndex& t) {
  HilbertTable diff;
  try {
    diff = difference(table, t);
  } catch (const InputError& e) {
    return {Constancy::window_too_small, std::nullopt, e.what()};
  }
  bool cells_equal = std::adjacent_find(diff.values.begin(), diff.values.end(), std::not_equal_to<>()) == diff.values.end();
  std::optional<std::int64_t> coeff = fit.certificate.stable ? mixed_mult_maximal(fit.poly, t) : std::nullopt;
  if (!fit.certificate.stable) return {Constancy::window_too_small, std::nullopt, "fit is not stable on the window"};
  if (cells_equal && coeff) {
    if (diff.values.empty() || diff.values.front() != *coeff)
      return {Constancy::window_too_small, std::nullopt, "difference cells disagree with the fitted coefficient"};
    return {Constancy::constant, coeff, ""};
  }
  if (!cells_equal && !coeff) return {Constancy::not_constant, std::nullopt, ""};
  if (cells_equal)
    return {Constancy::window_too_small, std::nullopt, "difference is constant on the window but higher coefficients survive"};
  return {Constancy::window_too_small, std::nullopt, "difference varies on the window but the fit says constant"};
}

}  // namespace mixmult

#endif  // MIXMULT_HILBERT_FIT_HPP
