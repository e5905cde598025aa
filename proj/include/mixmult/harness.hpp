#ifndef MIXMULT_HARNESS_HPP
#define MIXMULT_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixmult/error.hpp"
#include "mixmult/hilbert_fit.hpp"
#include "mixmult/koszul.hpp"
#include "mixmult/length.hpp"
#include "mixmult/reductions.hpp"

namespace mixmult {

enum class Verdict { pass, retry, hypothesis_not_met, fail };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::retry: return "retry";
    case Verdict::hypothesis_not_met: return "hypothesis_not_met";
    default: return "fail";
  }
}

struct VerificationReport {
  std::string theorem;
  std::vector<std::pair<std::string, std::string>> quantities;
  Verdict verdict = Verdict::pass;
  std::vector<std::string> diagnostics;

  void put(const std::string& name, const std::string& value) { quantities.emplace_back(name, value); }
  void put(const std::string& name, std::int64_t value) { put(name, std::to_string(value)); }
  void put_flag(const std::string& name, bool value) { put(name, std::string(value ? "true" : "false")); }

  // exact mismatches fail; randomized misses only ask for a retry
  void fail(const std::string& why) {
    verdict = Verdict::fail;
    diagnostics.push_back(why);
  }
  void retry(const std::string& why) {
    if (verdict == Verdict::pass) verdict = Verdict::retry;
    diagnostics.push_back(why);
  }
  void expect_equal(const std::string& what, std::int64_t a, std::int64_t b) {
    if (a != b) fail(what + ": " + std::to_string(a) + " != " + std::to_string(b));
  }
};

struct HarnessOptions {
  std::optional<Box> window;
  std::uint64_t seed = 1;
  int attempts = 8;
};

namespace detail {

inline std::string opt_to_string(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "undefined"; }

struct PFit {
  HilbertTable table;
  BinomialFit fit;
};

inline PFit fit_p(const IdealFamily& fam, const DirectSum& m, const Box& window) {
  HilbertTable t = hilbert_P(fam, m, window);
  BinomialFit f = fit_binomial(t);
  return {std::move(t), std::move(f)};
}

// e at t, or nothing (with the reason recorded) when the fit or the value fails
inline std::optional<std::int64_t> e_at(const IdealFamily& fam, const DirectSum& m, const Box& window,
                                        const TypeIndex& t, VerificationReport& r, const std::string& label) {
  PFit p = fit_p(fam, m, window);
  if (!p.fit.certificate.stable) {
    r.retry("P fit of " + label + " is unstable on the window; enlarge it");
    return std::nullopt;
  }
  auto e = mixed_mult_maximal(p.fit.poly, t);
  if (!e) r.fail("e of " + label + " undefined at " + t.to_string());
  return e;
}

inline Subquotient quotient_by(const Subquotient& m, const Subquotient& n) {
  if (!(n.den() == m.den())) throw InputError("submodule must share the denominator of the module");
  if (!m.num().contains(n.num())) throw InputError("submodule numerator is not inside the module numerator");
  return Subquotient(m.num(), n.num());
}

inline std::string prime_name(const VarSet& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::string("x") + std::to_string(p[i] + 1);
  return s + ")";
}

template <typename Field>
std::optional<std::int64_t> chi_value(const Field& f, const ReductionCandidate<Field>& c, const IdealFamily& fam,
                                      const DirectSum& m, const Box& window, VerificationReport& r,
                                      const std::string& label) {
  try {
    return chi(f, c, fam, m, ChiOptions{window, false, std::nullopt}).value;
  } catch (const RefusedError& e) {
    r.retry("chi of " + label + " refused: " + e.what());
  } catch (const InconsistencyError& e) {
    r.fail("chi of " + label + ": " + e.what());
  } catch (const InputError& e) {
    r.fail("chi of " + label + ": " + e.what());
  }
  return std::nullopt;
}

}  // namespace detail

// e = constant difference of P = chi; e > 0 iff the reduction is minimal;
// e(M) = e(N) + e(M/N); chi independent of the reduction.
template <typename Field>
VerificationReport verify_main(const Field& f, const Subquotient& m, const Subquotient& n, const IdealFamily& fam,
                               const TypeIndex& t, const HarnessOptions& opt = {}) {
  VerificationReport r{"main: e = difference of P = chi; positivity; additivity; independence", {}, Verdict::pass, {}};
  Subquotient q = detail::quotient_by(m, n);
  Box window = opt.window.value_or(default_window(fam, std::vector<DirectSum>{m, n, q}));
  Rng rng(opt.seed);
  JointType jt = JointType::from_type_index(t);
  r.put("type", t.to_string());
  r.put("window", window.lo.to_string() + ".." + window.hi.to_string());

  detail::PFit p = detail::fit_p(fam, m, window);
  if (!p.fit.certificate.stable) {
    r.retry("P fit unstable on the window; enlarge it");
    return r;
  }
  auto e = mixed_mult_maximal(p.fit.poly, t);
  r.put("e", detail::opt_to_string(e));
  if (!e) {
    r.verdict = Verdict::hypothesis_not_met;
    r.diagnostics.push_back("mixed multiplicity is not of maximal degree at " + t.to_string());
    return r;
  }
  ConstancyReport cd = constant_difference(p.table, p.fit, t);
  r.put("difference of P", cd.value ? std::to_string(*cd.value) : to_string(cd.status));
  if (cd.status != Constancy::constant) r.retry("difference of P not certified constant: " + cd.diagnostic);
  else r.expect_equal("e vs difference of P", *e, *cd.value);

  auto s1 = find_joint_reduction(f, fam, DirectSum(m), jt, window, rng, opt.attempts, opt.seed);
  if (!s1.found()) {
    r.retry("no joint reduction of type " + jt.to_string() + " found; retry with a new seed or enlarge the window");
    return r;
  }
  r.put("reduction", s1.candidate->to_string(f));
  auto chi1 = detail::chi_value(f, *s1.candidate, fam, m, window, r, "M");
  r.put("chi", detail::opt_to_string(chi1));
  if (chi1) r.expect_equal("e vs chi", *e, *chi1);

  MinimalityReport mr = is_minimal_joint_reduction(f, *s1.candidate, fam, DirectSum(m), window, rng, opt.attempts, &p.fit.poly);
  r.put_flag("minimal", mr.minimal);
  r.put_flag("e > 0", *e > 0);
  if (*e > 0 && !mr.minimal) r.fail("e > 0 but a smaller joint reduction was verified");
  if (*e == 0 && mr.minimal) r.retry("e = 0 but no smaller joint reduction was found; retry with a new seed");

  auto en = detail::e_at(fam, n, window, t, r, "N");
  auto eq = detail::e_at(fam, q, window, t, r, "M/N");
  r.put("e(N)", detail::opt_to_string(en));
  r.put("e(M/N)", detail::opt_to_string(eq));
  if (en && eq) r.expect_equal("e(M) vs e(N) + e(M/N)", *e, *en + *eq);

  auto s2 = find_joint_reduction(f, fam, DirectSum(m), jt, window, rng, opt.attempts, opt.seed);
  if (!s2.found()) {
    r.retry("second joint reduction not found");
  } else {
    auto chi2 = detail::chi_value(f, *s2.candidate, fam, m, window, r, "M (second reduction)");
    r.put("chi (second reduction)", detail::opt_to_string(chi2));
    if (chi1 && chi2) r.expect_equal("chi independence", *chi1, *chi2);
  }
  return r;
}

// Positivity, properness, minimality of every found reduction and existence of
// a minimal one must agree; maximality of a weak-(FC) sequence is reported on
// the side.
template <typename Field>
VerificationReport verify_positivity_equivalences(const Field& f, const IdealFamily& fam, const DirectSum& m,
                                                  const TypeIndex& t, const HarnessOptions& opt = {}) {
  VerificationReport r{"positivity equivalences", {}, Verdict::pass, {}};
  Box window = opt.window.value_or(default_window(fam, m));
  Rng rng(opt.seed);
  JointType jt = JointType::from_type_index(t);
  r.put("type", t.to_string());

  detail::PFit p = detail::fit_p(fam, m, window);
  if (!p.fit.certificate.stable) {
    r.retry("P fit unstable on the window; enlarge it");
    return r;
  }
  ConstancyReport cd = constant_difference(p.table, p.fit, t);
  r.put("difference of P", cd.value ? std::to_string(*cd.value) : to_string(cd.status));
  if (cd.status == Constancy::not_constant) {
    r.verdict = Verdict::hypothesis_not_met;
    r.diagnostics.push_back("difference of P is not constant at " + t.to_string());
    return r;
  }
  if (cd.status == Constancy::window_too_small) {
    r.retry(cd.diagnostic);
    return r;
  }
  const bool positive = *cd.value > 0;
  r.put_flag("(i) positive", positive);

  std::vector<ReductionCandidate<Field>> found;
  for (int k = 0; k < 2; ++k) {
    auto s = find_joint_reduction(f, fam, m, jt, window, rng, opt.attempts, opt.seed);
    if (s.found()) found.push_back(std::move(*s.candidate));
  }
  if (found.empty()) {
    r.retry("no joint reduction of type " + jt.to_string() + " found");
    return r;
  }
  bool proper = true, all_minimal = true, some_minimal = false, exact_conflict = false;
  for (const auto& c : found) {
    ReductionCandidate<Field> head = c;
    head.lists[0].pop_back();
    bool head_reduces = is_joint_reduction(f, head, fam, m, window).holds;
    if (head_reduces) proper = false;
    MinimalityReport mr = is_minimal_joint_reduction(f, c, fam, m, window, rng, opt.attempts, &p.fit.poly);
    all_minimal = all_minimal && mr.minimal;
    some_minimal = some_minimal || mr.minimal;
    if (positive && (head_reduces || !mr.minimal)) exact_conflict = true;
  }
  r.put_flag("(iv) proper", proper);
  r.put_flag("(v) every found reduction minimal", all_minimal);
  r.put_flag("(vi) a minimal reduction exists", some_minimal);
  if (!(positive == proper && proper == all_minimal && all_minimal == some_minimal)) {
    if (exact_conflict) r.fail("a verified smaller joint reduction contradicts positivity");
    else r.retry("searches found no smaller joint reduction although the difference is 0; retry with a new seed");
  }

  // I-elements first, J-elements last
  ReductionCandidate<Field> seq = random_candidate(f, fam, jt, rng);
  std::vector<Polynomial<Field>> xs;
  for (const auto& [coord, x] : seq.ordered()) xs.push_back(*x);
  MaximalityReport mx = maximality_check(f, xs, fam, m);
  r.put_flag("(ii)/(iii) generic sequence maximal (heuristic)", mx.maximal);
  if (mx.maximal != positive) r.diagnostics.push_back("heuristic maximality check disagrees with positivity");
  return r;
}

// e = sum over minimal primes p of l(M_p) e(A/p), and the same over the
// primes of M-bar of dimension at least k0 + 1 + |k|.
template <typename Field>
VerificationReport verify_additivity_reduction(const Field& /*f*/, const IdealFamily& fam, const Subquotient& m,
                                               const TypeIndex& t, const HarnessOptions& opt = {}) {
  VerificationReport r{"additivity and reduction formula", {}, Verdict::pass, {}};
  const std::size_t nv = fam.num_vars();
  MonomialIdeal ann = m.annihilator();
  std::vector<VarSet> pi;
  if (!ann.is_unit()) {
    MinimalPrimes mp = minimal_primes(ann);
    pi = mp.zero_ideal ? std::vector<VarSet>{VarSet{}} : mp.primes;
  }
  Saturation sat = saturate_module(m, fam);
  std::vector<VarSet> lambda;
  MonomialIdeal ann_bar = sat.mbar.annihilator();
  if (!ann_bar.is_unit()) {
    MinimalPrimes mp = minimal_primes(ann_bar);
    for (const VarSet& p : mp.zero_ideal ? std::vector<VarSet>{VarSet{}} : mp.primes)
      if (static_cast<std::int64_t>(nv - p.size()) >= t.total() + 1) lambda.push_back(p);
  }

  std::vector<DirectSum> mods{m};
  for (const VarSet& p : pi) mods.push_back(Subquotient::cyclic(MonomialIdeal::prime(nv, p)));
  Box window = opt.window.value_or(default_window(fam, mods));
  r.put("type", t.to_string());

  auto e = detail::e_at(fam, m, window, t, r, "M");
  r.put("e", detail::opt_to_string(e));
  if (!e) {
    if (r.verdict == Verdict::fail) r.verdict = Verdict::hypothesis_not_met;
    return r;
  }

  auto contribution = [&](const VarSet& p, const std::string& set) -> std::optional<std::int64_t> {
    std::int64_t len = 0;
    try {
      len = static_cast<std::int64_t>(localized_length(m, p));
    } catch (const InputError& ex) {
      r.fail("prime " + detail::prime_name(p) + ": " + ex.what());
      return std::nullopt;
    }
    auto ep = detail::e_at(fam, Subquotient::cyclic(MonomialIdeal::prime(nv, p)), window, t, r, "A/" + detail::prime_name(p));
    if (!ep) return std::nullopt;
    r.put(set + ": l(M_p) e(A/p) at p = " + detail::prime_name(p), std::to_string(len) + "*" + std::to_string(*ep));
    return checked::mul(len, *ep);
  };

  std::int64_t pi_sum = 0, lambda_sum = 0;
  bool ok = true;
  for (const VarSet& p : pi) {
    auto c = contribution(p, "minimal primes");
    if (c) pi_sum += *c;
    else ok = false;
  }
  for (const VarSet& p : lambda) {
    if (std::find(pi.begin(), pi.end(), p) == pi.end()) r.fail("prime " + detail::prime_name(p) + " of M-bar is not minimal over Ann(M)");
    auto c = contribution(p, "large primes of M-bar");
    if (c) lambda_sum += *c;
    else ok = false;
  }
  r.put("sum over minimal primes", pi_sum);
  r.put("sum over large primes of M-bar", lambda_sum);
  if (ok) {
    r.expect_equal("e vs sum over minimal primes", *e, pi_sum);
    r.expect_equal("e vs sum over large primes of M-bar", *e, lambda_sum);
  }
  return r;
}

// e(R^r) = r e(R), chi(x, R^r) = r chi(x, R)
template <typename Field>
VerificationReport verify_rank_formula(const Field& f, std::int64_t rank, const IdealFamily& fam, const TypeIndex& t,
                                       const HarnessOptions& opt = {}) {
  if (rank < 1) throw InputError("rank must be positive");
  VerificationReport r{"rank formula", {}, Verdict::pass, {}};
  Subquotient ring = Subquotient::ring(fam.num_vars());
  DirectSum free = DirectSum::copies(ring, static_cast<std::size_t>(rank));
  Box window = opt.window.value_or(default_window(fam, ring));
  Rng rng(opt.seed);
  r.put("rank", rank);
  r.put("type", t.to_string());

  detail::PFit p = detail::fit_p(fam, ring, window);
  if (!p.fit.certificate.stable) {
    r.retry("P fit unstable on the window");
    return r;
  }
  auto e1 = mixed_mult_maximal(p.fit.poly, t);
  if (!e1) {
    r.verdict = Verdict::hypothesis_not_met;
    r.diagnostics.push_back("e(A) undefined at " + t.to_string());
    return r;
  }
  auto er = detail::e_at(fam, free, window, t, r, "A^r");
  r.put("e(A)", *e1);
  r.put("e(A^r)", detail::opt_to_string(er));
  if (er) r.expect_equal("e(A^r) vs r e(A)", *er, checked::mul(rank, *e1));

  auto s = find_joint_reduction(f, fam, ring, JointType::from_type_index(t), window, rng, opt.attempts, opt.seed);
  if (!s.found()) {
    r.retry("no joint reduction found for A");
    return r;
  }
  auto c1 = detail::chi_value(f, *s.candidate, fam, ring, window, r, "A");
  auto cr = detail::chi_value(f, *s.candidate, fam, free, window, r, "A^r");
  r.put("chi(A)", detail::opt_to_string(c1));
  r.put("chi(A^r)", detail::opt_to_string(cr));
  if (c1 && cr) r.expect_equal("chi(A^r) vs r chi(A)", *cr, checked::mul(rank, *c1));
  return r;
}

// 0 -> N -> M -> M/N -> 0: e and chi are additive.
template <typename Field>
VerificationReport verify_exact_sequence(const Field& f, const Subquotient& m, const Subquotient& n,
                                         const IdealFamily& fam, const TypeIndex& t, const HarnessOptions& opt = {}) {
  VerificationReport r{"exact sequence additivity", {}, Verdict::pass, {}};
  Subquotient q = detail::quotient_by(m, n);
  Box window = opt.window.value_or(default_window(fam, std::vector<DirectSum>{m, n, q}));
  Rng rng(opt.seed);
  r.put("type", t.to_string());

  auto em = detail::e_at(fam, m, window, t, r, "M");
  if (!em && r.verdict == Verdict::fail) {
    r.verdict = Verdict::hypothesis_not_met;
    return r;
  }
  auto en = detail::e_at(fam, n, window, t, r, "N");
  auto eq = detail::e_at(fam, q, window, t, r, "M/N");
  r.put("e(M)", detail::opt_to_string(em));
  r.put("e(N)", detail::opt_to_string(en));
  r.put("e(M/N)", detail::opt_to_string(eq));
  if (em && en && eq) r.expect_equal("e(M) vs e(N) + e(M/N)", *em, *en + *eq);

  auto s = find_joint_reduction(f, fam, DirectSum(m), JointType::from_type_index(t), window, rng, opt.attempts, opt.seed);
  if (!s.found()) {
    r.retry("no joint reduction found for M");
    return r;
  }
  for (const auto& [label, mod] : {std::pair<std::string, const Subquotient*>{"N", &n}, {"M/N", &q}})
    if (!is_joint_reduction(f, *s.candidate, fam, *mod, window).holds)
      r.fail("joint reduction of M is not one for " + label);
  auto cm = detail::chi_value(f, *s.candidate, fam, m, window, r, "M");
  auto cn = detail::chi_value(f, *s.candidate, fam, n, window, r, "N");
  auto cq = detail::chi_value(f, *s.candidate, fam, q, window, r, "M/N");
  r.put("chi(M)", detail::opt_to_string(cm));
  r.put("chi(N)", detail::opt_to_string(cn));
  r.put("chi(M/N)", detail::opt_to_string(cq));
  if (cm && cn && cq) r.expect_equal("chi(M) vs chi(N) + chi(M/N)", *cm, *cn + *cq);
  return r;
}

}  // namespace mixmult

#endif  // MIXMULT_HARNESS_HPP
