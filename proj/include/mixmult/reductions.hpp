#ifndef MIXMULT_REDUCTIONS_HPP
#define MIXMULT_REDUCTIONS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixmult/error.hpp"
#include "mixmult/field.hpp"
#include "mixmult/hilbert_fit.hpp"
#include "mixmult/length.hpp"
#include "mixmult/linalg.hpp"
#include "mixmult/poly.hpp"
#include "mixmult/truncation.hpp"

namespace mixmult {

// Sizes of a candidate: k_i elements of I_i and j_count elements of J.
// TypeIndex (k0, k) corresponds to j_count = k0 + 1.
struct JointType {
  std::vector<std::int64_t> k;
  std::int64_t j_count = 0;

  static JointType from_type_index(const TypeIndex& t) {
    if (t.size() < 2) throw InputError("type index needs k0 and at least one k_i");
    JointType jt{std::vector<std::int64_t>(t.c.begin() + 1, t.c.end()), t[0] + 1};
    jt.validate();
    return jt;
  }

  void validate() const {
    if (j_count < 0) throw InputError("negative number of J elements");
    for (auto v : k)
      if (v < 0) throw InputError("negative number of I elements");
  }

  // nullopt when there are no J elements
  std::optional<TypeIndex> type_index() const {
    if (j_count == 0) return std::nullopt;
    std::vector<std::int64_t> c{j_count - 1};
    c.insert(c.end(), k.begin(), k.end());
    return TypeIndex(std::move(c));
  }

  // (j_count, k): the order of the F-difference matching this type
  MultiIndex f_order() const {
    std::vector<std::int64_t> c{j_count};
    c.insert(c.end(), k.begin(), k.end());
    return MultiIndex(std::move(c));
  }

  std::int64_t count(std::size_t coord) const { return coord == 0 ? j_count : k.at(coord - 1); }

  std::int64_t size() const {
    std::int64_t s = j_count;
    for (auto v : k) s += v;
    return s;
  }

  // Types with one element fewer; a joint reduction stays one when elements
  // are added, so these are the only smaller types worth searching.
  std::vector<JointType> predecessors() const {
    std::vector<JointType> out;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] > 0) {
        JointType p = *this;
        --p.k[i];
        out.push_back(p);
      }
    if (j_count > 0) {
      JointType p = *this;
      --p.j_count;
      out.push_back(p);
    }
    return out;
  }

  friend bool operator==(const JointType&, const JointType&) = default;

  std::string to_string() const {
    std::string s = "((";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + ")," + std::to_string(j_count) + ")";
  }
};

// Element lists for J (coordinate 0) and I_1..I_d (coordinates 1..d).
template <typename Field>
struct ReductionCandidate {
  std::vector<std::vector<Polynomial<Field>>> lists;

  JointType type() const {
    JointType t;
    t.j_count = static_cast<std::int64_t>(lists.at(0).size());
    for (std::size_t i = 1; i < lists.size(); ++i) t.k.push_back(static_cast<std::int64_t>(lists[i].size()));
    return t;
  }

  // Koszul order: I_1 elements, ..., I_d elements, then J elements.
  std::vector<std::pair<std::size_t, const Polynomial<Field>*>> ordered() const {
    std::vector<std::pair<std::size_t, const Polynomial<Field>*>> out;
    for (std::size_t c = 1; c < lists.size(); ++c)
      for (const auto& x : lists[c]) out.emplace_back(c, &x);
    for (const auto& x : lists.at(0)) out.emplace_back(0, &x);
    return out;
  }

  std::string to_string(const Field& f, const std::vector<std::string>* names = nullptr) const {
    std::string s;
    for (std::size_t c = 0; c < lists.size(); ++c) {
      s += c == 0 ? "J: [" : "; I" + std::to_string(c) + ": [";
      for (std::size_t i = 0; i < lists[c].size(); ++i) s += (i ? ", " : "") + lists[c][i].to_string(f, names);
      s += "]";
    }
    return s;
  }
};

// Every term of x must lie in the (monomial) ideal a.
template <typename Field>
bool element_in_ideal(const Polynomial<Field>& x, const MonomialIdeal& a) {
  for (const auto& [m, c] : x.terms())
    if (!a.contains(m)) return false;
  return true;
}

template <typename Field>
void validate_candidate(const ReductionCandidate<Field>& c, const IdealFamily& fam) {
  if (c.lists.size() != fam.d() + 1) throw InputError("candidate must list elements for J and each I_i");
  for (std::size_t k = 0; k < c.lists.size(); ++k)
    for (const auto& x : c.lists[k]) {
      if (x.num_vars() != fam.num_vars()) throw InputError("candidate element lives in a different ring");
      if (!element_in_ideal(x, fam.coordinate_ideal(k)))
        throw InputError("candidate element is not in " + std::string(k == 0 ? "J" : "I" + std::to_string(k)));
    }
}

// Random combination of the minimal generators, all coefficients nonzero.
template <typename Field>
Polynomial<Field> generic_element(const Field& f, const MonomialIdeal& a, Rng& rng) {
  if (a.is_zero()) throw InputError("generic_element: the zero ideal has no generic element");
  Polynomial<Field> x(a.num_vars());
  for (const Monomial& g : a.generators()) x.add_term(f, g, f.random_nonzero(rng));
  return x;
}

template <typename Field>
ReductionCandidate<Field> random_candidate(const Field& f, const IdealFamily& fam, const JointType& t, Rng& rng) {
  t.validate();
  if (t.k.size() != fam.d()) throw InputError("type has " + std::to_string(t.k.size()) + " I-counts, family has d = " + std::to_string(fam.d()));
  ReductionCandidate<Field> c;
  c.lists.resize(fam.d() + 1);
  for (std::size_t coord = 0; coord <= fam.d(); ++coord)
    for (std::int64_t e = 0; e < t.count(coord); ++e) c.lists[coord].push_back(generic_element(f, fam.coordinate_ideal(coord), rng));
  return c;
}

// Nakayama test of J^{n0} I^n M = (J-part) J^{n0-1} I^n M + sum_i (I_i-part) J^{n0} I^{n-e_i} M:
// with W = J^{n0} I^n num, the images of the right side must span (W + den)/(mW + den),
// whose basis is the minimal generators of W outside den.
template <typename Field>
bool joint_reduction_at(const Field& f, const ReductionCandidate<Field>& c, PowerCache& cache, const DirectSum& m,
                        const MultiDegree& deg) {
  const std::size_t dims = cache.family().d() + 1;
  if (deg.size() != dims) throw InputError("multidegree has wrong length");
  for (const Subquotient& s : m.summands()) {
    MonomialIdeal w = cache.full(deg, s.num());
    std::map<Monomial, std::size_t> column;
    for (const Monomial& g : w.generators())
      if (!s.den().contains(g)) column.emplace(g, column.size());
    if (column.empty()) continue;
    RowEchelon<Field> ech(f, column.size());
    for (std::size_t coord = 0; coord < dims && !ech.full(); ++coord) {
      if (c.lists[coord].empty()) continue;
      MultiDegree shifted = deg;
      --shifted[coord];
      MonomialIdeal piece = cache.full(shifted, s.num());
      for (const auto& x : c.lists[coord]) {
        for (const Monomial& g : piece.generators()) {
          std::map<std::size_t, typename Field::value_type> acc;
          for (const auto& [a, coef] : x.terms()) {
            auto it = column.find(a * g);
            if (it == column.end()) continue;
            auto [jt, fresh] = acc.try_emplace(it->second, coef);
            if (!fresh) jt->second = f.add(jt->second, coef);
          }
          SparseVector<Field> row(acc.begin(), acc.end());
          ech.insert(row);
          if (ech.full()) break;
        }
        if (ech.full()) break;
      }
    }
    if (!ech.full()) return false;
  }
  return true;
}

template <typename Field>
bool joint_reduction_at(const Field& f, const ReductionCandidate<Field>& c, const IdealFamily& fam, const DirectSum& m,
                        const MultiDegree& deg) {
  validate_candidate(c, fam);
  PowerCache cache(fam);
  return joint_reduction_at(f, c, cache, m, deg);
}

struct ReductionCertificate {
  Box window;
  std::vector<std::pair<MultiDegree, bool>> cells;  // tested in order; stops at the first failure
  bool holds = false;
  std::optional<MultiDegree> failing_cell;
  std::uint64_t seed = 0;

  std::string verdict() const {
    return holds ? "holds (heuristic window)" : "fails at cell " + failing_cell->to_string();
  }
};

template <typename Field>
ReductionCertificate is_joint_reduction(const Field& f, const ReductionCandidate<Field>& c, const IdealFamily& fam,
                                        const DirectSum& m, const Box& window, std::uint64_t seed = 0) {
  validate_candidate(c, fam);
  require_window(fam, window);
  PowerCache cache(fam);
  ReductionCertificate cert{window, {}, true, std::nullopt, seed};
  for (const MultiDegree& cell : window.cells()) {
    bool ok = joint_reduction_at(f, c, cache, m, cell);
    cert.cells.emplace_back(cell, ok);
    if (!ok) {
      cert.holds = false;
      cert.failing_cell = cell;
      break;
    }
  }
  return cert;
}

template <typename Field>
struct SearchResult {
  std::optional<ReductionCandidate<Field>> candidate;
  std::optional<ReductionCertificate> certificate;
  std::vector<std::string> attempt_log;

  bool found() const { return candidate.has_value(); }
};

// Tries `attempts` random candidates of the type. Failure is evidence, not proof,
// that no joint reduction of this type exists.
template <typename Field>
SearchResult<Field> find_joint_reduction(const Field& f, const IdealFamily& fam, const DirectSum& m, const JointType& t,
                                         const Box& window, Rng& rng, int attempts = 8, std::uint64_t seed = 0) {
  if (attempts < 1) throw InputError("attempts must be positive");
  SearchResult<Field> out;
  // without elements every attempt is the same
  const int tries = t.size() == 0 ? 1 : attempts;
  for (int a = 0; a < tries; ++a) {
    ReductionCandidate<Field> c = random_candidate(f, fam, t, rng);
    ReductionCertificate cert = is_joint_reduction(f, c, fam, m, window, seed);
    out.attempt_log.push_back("attempt " + std::to_string(a + 1) + ": " + cert.verdict());
    if (cert.holds) {
      out.candidate = std::move(c);
      out.certificate = std::move(cert);
      return out;
    }
  }
  out.attempt_log.push_back("none found of type " + t.to_string() + " after " + std::to_string(tries) +
                            " attempt(s); evidence only, not a proof of nonexistence");
  return out;
}

struct MinimalityReport {
  bool is_reduction = false;
  bool minimal = false;
  std::vector<std::pair<JointType, bool>> predecessors;  // type, reduction found
  std::optional<std::int64_t> e;                          // mixed multiplicity at the type, when defined
  std::optional<bool> agrees_with_positivity;
  std::vector<std::string> diagnostics;
};

// Minimal iff no predecessor type admits a joint reduction; the answer is
// compared against e > 0 when e is defined at the type.
template <typename Field>
MinimalityReport is_minimal_joint_reduction(const Field& f, const ReductionCandidate<Field>& c, const IdealFamily& fam,
                                            const DirectSum& m, const Box& window, Rng& rng, int attempts = 8,
                                            const BinomialPoly* p_fit = nullptr) {
  MinimalityReport r;
  ReductionCertificate cert = is_joint_reduction(f, c, fam, m, window);
  r.is_reduction = cert.holds;
  if (!cert.holds) {
    r.diagnostics.push_back("candidate is not a joint reduction: " + cert.verdict());
    return r;
  }
  JointType t = c.type();
  r.minimal = true;
  for (const JointType& p : t.predecessors()) {
    bool found = find_joint_reduction(f, fam, m, p, window, rng, attempts).found();
    r.predecessors.emplace_back(p, found);
    if (found) r.minimal = false;
  }
  if (auto ti = t.type_index()) {
    BinomialFit local;
    if (!p_fit) {
      local = fit_binomial(hilbert_P(fam, m, window));
      if (!local.certificate.stable) {
        r.diagnostics.push_back("P fit unstable on the window; positivity not compared");
        return r;
      }
      p_fit = &local.poly;
    }
    r.e = mixed_mult_maximal(*p_fit, *ti);
    if (r.e) {
      r.agrees_with_positivity = (*r.e > 0) == r.minimal;
      if (!*r.agrees_with_positivity)
        r.diagnostics.push_back("minimality search says " + std::string(r.minimal ? "minimal" : "not minimal") +
                                " but e = " + std::to_string(*r.e));
    } else {
      r.diagnostics.push_back("mixed multiplicity undefined at " + ti->to_string() + "; positivity not compared");
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// weak-(FC) elements

struct FCWitness {
  std::string element;
  std::size_t index = 0;                                // i with x in I_i (1-based)
  std::vector<std::pair<MultiDegree, bool>> fc1;        // per window cell
  bool fc1_holds = false;
  bool fc2 = false;
  std::optional<Exponent> truncation;                   // unset when exact
  bool exact = false;
  bool stable = true;                                   // truncated results agreed over D, D+1, D+2
  std::vector<std::string> diagnostics;
};

namespace detail {

// I-part of a window (coordinates 1..d) without repetitions; n0 plays no role in FC1.
inline std::vector<MultiDegree> rees_cells(const Box& window) {
  std::vector<MultiDegree> out;
  for (MultiDegree cell : window.cells()) {
    cell[0] = 0;
    if (std::find(out.begin(), out.end(), cell) == out.end()) out.push_back(cell);
  }
  return out;
}

inline MonomialIdeal rees_product(PowerCache& cache, const MultiDegree& n, const MonomialIdeal& num) {
  return cache.rees(n, num);
}

// FC1 at n for x in a truncation: dim(xV ∩ I^n V) == dim(x I^{n-e_i} V).
template <typename Field>
bool fc1_truncated(const Field& f, const Polynomial<Field>& x, std::size_t i, PowerCache& cache, const Subquotient& s,
                   const MultiDegree& n, Exponent bound) {
  TruncatedPiece v(s.num(), s.den(), bound);
  MonomialIdeal in = rees_product(cache, n, s.num());
  MultiDegree lower = n;
  --lower[i];
  MonomialIdeal below = rees_product(cache, lower, s.num());

  // columns not in I^n V, for projecting xV off I^n V
  std::vector<std::size_t> outside_col(v.size(), static_cast<std::size_t>(-1));
  std::size_t n_out = 0;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!in.contains(v.basis()[c])) outside_col[c] = n_out++;

  RowEchelon<Field> x_span(f, v.size()), x_proj(f, std::max<std::size_t>(n_out, 1)), z_span(f, v.size());
  for (const Monomial& u : v.basis()) {
    SparseVector<Field> row = multiply_into(f, x, u, v);
    x_span.insert(row);
    if (n_out) {
      SparseVector<Field> proj;
      for (const auto& [c, val] : row)
        if (outside_col[c] != static_cast<std::size_t>(-1)) proj.emplace_back(outside_col[c], val);
      x_proj.insert(proj);
    }
    if (below.contains(u)) z_span.insert(row);
  }
  std::size_t meet = x_span.rank() - (n_out ? x_proj.rank() : 0);
  return meet == z_span.rank();
}

// x is regular on Mbar in degrees below `bound`
template <typename Field>
bool regular_truncated(const Field& f, const Polynomial<Field>& x, const Subquotient& mbar, Exponent bound) {
  TruncatedPiece src(mbar.num(), mbar.den(), bound);
  TruncatedPiece dst(mbar.num(), mbar.den(), bound + x.order().value_or(0));
  RowEchelon<Field> ech(f, std::max<std::size_t>(dst.size(), 1));
  for (const Monomial& u : src.basis())
    if (!ech.insert(multiply_into(f, x, u, dst))) return false;
  return true;
}

}  // namespace detail

template <typename Field>
FCWitness weak_fc_check(const Field& f, const Polynomial<Field>& x, std::size_t i, const IdealFamily& fam,
                        const Subquotient& m, const Box& window, std::optional<Exponent> truncation = std::nullopt) {
  if (i < 1 || i > fam.d()) throw InputError("weak_fc_check: index i must be in 1..d");
  if (x.is_zero() || !element_in_ideal(x, fam.ideal(i - 1)))
    throw InputError("weak_fc_check: element is not a nonzero element of I" + std::to_string(i));
  require_window(fam, window);
  if (m.num_vars() != fam.num_vars()) throw InputError("module and family live in different rings");

  FCWitness w;
  w.element = x.to_string(f);
  w.index = i;
  PowerCache cache(fam);
  std::vector<MultiDegree> cells = detail::rees_cells(window);
  MonomialIdeal sat = colon_saturate(m.den(), fam.product());

  if (x.is_monomial()) {
    w.exact = true;
    const Monomial& u = x.terms().begin()->first;
    MonomialIdeal xm = ideal_sum(ideal_product(m.num(), u), m.den());
    for (const MultiDegree& n : cells) {
      MultiDegree lower = n;
      --lower[i];
      MonomialIdeal lhs = ideal_intersection(xm, ideal_sum(cache.rees(n, m.num()), m.den()));
      MonomialIdeal rhs = ideal_sum(ideal_product(cache.rees(lower, m.num()), u), m.den());
      w.fc1.emplace_back(n, lhs == rhs);
    }
    // 0_M : x inside 0_M : I^infinity, as ideals between den and num
    MonomialIdeal killed = ideal_intersection(ideal_colon(m.den(), u), m.num());
    w.fc2 = ideal_intersection(sat, m.num()).contains(killed);
  } else {
    Exponent base = truncation.value_or(0);
    if (!truncation) {
      Exponent deepest = 0;
      for (const MultiDegree& n : cells) deepest = std::max(deepest, cache.rees(n, m.num()).max_generator_degree());
      base = deepest + fam.ideal(i - 1).max_generator_degree() + 2;
    }
    Subquotient mbar(m.num(), ideal_intersection(sat, m.num()));
    std::vector<std::vector<bool>> runs;
    std::vector<bool> fc2_runs;
    for (Exponent d = base; d <= base + 2; ++d) {
      std::vector<bool> r;
      for (const MultiDegree& n : cells) r.push_back(detail::fc1_truncated(f, x, i, cache, m, n, d));
      runs.push_back(r);
      fc2_runs.push_back(detail::regular_truncated(f, x, mbar, d));
    }
    w.stable = std::all_of(runs.begin(), runs.end(), [&](const auto& r) { return r == runs.front(); }) &&
               std::all_of(fc2_runs.begin(), fc2_runs.end(), [&](bool b) { return b == fc2_runs.front(); });
    if (!w.stable) w.diagnostics.push_back("truncated results changed between D and D+2");
    for (std::size_t c = 0; c < cells.size(); ++c) w.fc1.emplace_back(cells[c], runs.back()[c]);
    w.fc2 = fc2_runs.back();
    w.truncation = base + 2;
  }
  w.fc1_holds = std::all_of(w.fc1.begin(), w.fc1.end(), [](const auto& p) { return p.second; });
  return w;
}

// ---------------------------------------------------------------------------
// Maximal weak-(FC) sequences, by the dimension criterion only

struct MaximalityReport {
  bool before_not_nilpotent = false;  // I not inside the radical of Ann(M/(x_1..x_{t-1})M)
  bool after_nilpotent = false;       // I inside the radical of Ann(M/(x_1..x_t)M)
  bool maximal = false;
  std::int64_t power = 0;
  Exponent truncation = 0;
};

namespace detail {

// I^s M ⊆ (xs) M, tested on minimal generators inside a degree truncation.
template <typename Field>
bool power_inside(const Field& f, const std::vector<const Polynomial<Field>*>& xs, const MonomialIdeal& is,
                  const Subquotient& s, Exponent bound) {
  TruncatedPiece v(s.num(), s.den(), bound);
  MonomialIdeal target = ideal_product(is, s.num());
  RowEchelon<Field> span(f, std::max<std::size_t>(v.size(), 1));
  for (const Polynomial<Field>* x : xs)
    for (const Monomial& u : v.basis()) span.insert(multiply_into(f, *x, u, v));
  for (const Monomial& g : target.generators()) {
    auto idx = v.index_of(g);
    if (!idx) continue;  // in den, or beyond the truncation
    if (!span.in_span(SparseVector<Field>{{*idx, f.one()}})) return false;
  }
  return true;
}

}  // namespace detail

template <typename Field>
MaximalityReport maximality_check(const Field& f, const std::vector<Polynomial<Field>>& seq, const IdealFamily& fam,
                                  const DirectSum& m) {
  if (seq.empty()) throw InputError("maximality_check needs a nonempty sequence");
  MaximalityReport r;
  Exponent g = input_degree(fam, m);
  r.power = static_cast<std::int64_t>(fam.num_vars() * g + 2);
  MonomialIdeal is = ideal_power(fam.product(), static_cast<std::size_t>(r.power));
  Exponent deepest = 0;
  for (const Subquotient& s : m.summands()) deepest = std::max(deepest, ideal_product(is, s.num()).max_generator_degree());
  r.truncation = deepest + 2;

  std::vector<const Polynomial<Field>*> all, head;
  for (const auto& x : seq) all.push_back(&x);
  head.assign(all.begin(), all.end() - 1);
  bool before = true, after = true;
  for (const Subquotient& s : m.summands()) {
    before = before && detail::power_inside(f, head, is, s, r.truncation);
    after = after && detail::power_inside(f, all, is, s, r.truncation);
  }
  r.before_not_nilpotent = !before;
  r.after_nilpotent = after;
  r.maximal = r.before_not_nilpotent && r.after_nilpotent;
  return r;
}

}  // namespace mixmult

#endif  // MIXMULT_REDUCTIONS_HPP
