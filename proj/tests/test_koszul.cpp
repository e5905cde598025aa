#include <gtest/gtest.h>

#include "util.hpp"

using namespace mixmult;

namespace {

IdealFamily plane() { return IdealFamily(MonomialIdeal::maximal(2), {MonomialIdeal::maximal(2)}); }
IdealFamily line() { return IdealFamily(MonomialIdeal::maximal(1), {MonomialIdeal::maximal(1)}); }

template <typename Field>
ReductionCandidate<Field> search(const Field& f, const IdealFamily& fam, const DirectSum& m, JointType t, std::uint64_t seed) {
  Rng rng(seed);
  auto s = find_joint_reduction(f, fam, m, t, default_window(fam, m), rng);
  if (!s.found()) throw std::runtime_error("no joint reduction found in test setup");
  return *s.candidate;
}

}  // namespace

// Two generic linear forms from J on the Rees module of I = m over k[x,y]:
// H_0 = m^n / m^{n+1} has length n+1, the forms are regular so H_2 = 0, and
// H_1 has length n.
TEST(Koszul, PlaneHandValues) {
  PrimeField f;
  IdealFamily fam = plane();
  auto c = search(f, fam, Subquotient::ring(2), JointType{{0}, 2}, 3);
  for (std::int64_t n = 0; n <= 3; ++n) {
    HomologyReport h = koszul_homology(f, c, fam, Subquotient::ring(2), MultiDegree{3, n});
    ASSERT_TRUE(h.stable);
    EXPECT_EQ(h.lengths, (std::vector<std::int64_t>{n + 1, n, 0})) << "n = " << n;
    EXPECT_EQ(h.euler, 1);
  }
}

// k[x] with one J element x: H_0 = x^n / x^{n+1}, H_1 = 0.
TEST(Koszul, LineHandValues) {
  PrimeField f;
  IdealFamily fam = line();
  auto c = search(f, fam, Subquotient::ring(1), JointType{{0}, 1}, 1);
  for (std::int64_t n = 1; n <= 4; ++n) {
    HomologyReport h = koszul_homology(f, c, fam, Subquotient::ring(1), MultiDegree{2, n});
    ASSERT_TRUE(h.stable);
    EXPECT_EQ(h.lengths, (std::vector<std::int64_t>{1, 0}));
  }
}

TEST(Koszul, RationalsAgreeWithPrimeField) {
  PrimeField f;
  RationalField q;
  IdealFamily fam = plane();
  Subquotient m = Subquotient::cyclic(MonomialIdeal(2, {Monomial{1, 1}}));
  auto cp = search(f, fam, m, JointType{{1}, 0}, 5);
  auto cq = search(q, fam, m, JointType{{1}, 0}, 5);
  for (std::int64_t n = 2; n <= 4; ++n) {
    HomologyReport hp = koszul_homology(f, cp, fam, m, MultiDegree{0, n});
    HomologyReport hq = koszul_homology(q, cq, fam, m, MultiDegree{0, n});
    EXPECT_EQ(hp.lengths, hq.lengths);
  }
}

TEST(Koszul, TruncationControl) {
  PrimeField f;
  IdealFamily fam = plane();
  auto c = search(f, fam, Subquotient::ring(2), JointType{{0}, 2}, 3);
  EXPECT_EQ(default_koszul_truncation(fam, Subquotient::ring(2), c.type(), MultiDegree{3, 2}), 5u);
  HomologyReport h = koszul_homology(f, c, fam, Subquotient::ring(2), MultiDegree{3, 2}, 5);
  EXPECT_EQ(h.levels.front(), 5u);
  EXPECT_TRUE(h.stable);
  // one level can never be called stable
  EXPECT_FALSE(koszul_homology(f, c, fam, Subquotient::ring(2), MultiDegree{3, 2}, 5, 1).stable);
  EXPECT_THROW(koszul_homology(f, c, fam, Subquotient::ring(2), MultiDegree{3}), InputError);
  EXPECT_THROW(koszul_homology(f, c, fam, Subquotient::ring(2), MultiDegree{-1, 2}), InputError);
}

TEST(Chi, MatchesFDifferenceAndKoszul) {
  PrimeField f;
  IdealFamily fam = plane();
  auto c = search(f, fam, Subquotient::ring(2), JointType{{0}, 2}, 3);
  ChiResult r = chi(f, c, fam, Subquotient::ring(2), ChiOptions{std::nullopt, true, std::nullopt});
  EXPECT_EQ(r.value, 1);
  ASSERT_EQ(r.validations.size(), 2u);
  for (const auto& h : r.validations) EXPECT_EQ(h.euler, 1);
  ChiOracle o = chi_oracle(c.type(), fam, Subquotient::ring(2), default_window(fam, Subquotient::ring(2)));
  EXPECT_EQ(o.status, Constancy::constant);
  EXPECT_EQ(o.value, 1);
}

TEST(Chi, RefusesNonReductions) {
  PrimeField f;
  IdealFamily fam = plane();
  Rng rng(1);
  auto c = random_candidate(f, fam, JointType{{0}, 1}, rng);
  EXPECT_THROW(chi(f, c, fam, Subquotient::ring(2)), InputError);
}

TEST(GeneratingFunction, HoldsOnPlaneAndLine) {
  PrimeField f;
  {
    IdealFamily fam = plane();
    auto c = search(f, fam, Subquotient::ring(2), JointType{{0}, 2}, 3);
    GfCheck g = generating_function_check(f, c, fam, Subquotient::ring(2), Box{MultiIndex{1, 1}, MultiIndex{5, 4}});
    EXPECT_EQ(g.outcome, GfOutcome::holds);
    EXPECT_GE(g.cells.size(), 4u);
  }
  {
    IdealFamily fam = line();
    auto c = search(f, fam, Subquotient::ring(1), JointType{{0}, 1}, 1);
    GfCheck g = generating_function_check(f, c, fam, Subquotient::ring(1), Box{MultiIndex{1, 1}, MultiIndex{5, 5}});
    EXPECT_EQ(g.outcome, GfOutcome::holds);
  }
}

TEST(GeneratingFunction, ShallowWindowIsReported) {
  PrimeField f;
  IdealFamily fam = plane();
  auto c = search(f, fam, Subquotient::ring(2), JointType{{0}, 2}, 3);
  GfCheck g = generating_function_check(f, c, fam, Subquotient::ring(2), Box{MultiIndex{1, 1}, MultiIndex{2, 2}});
  EXPECT_EQ(g.outcome, GfOutcome::insufficient_depth);
  EXPECT_FALSE(g.diagnostics.empty());
}

// Euler characteristic equals the F-difference cell by cell, over several modules and types.
TEST(GeneratingFunction, PropertyOverModules) {
  PrimeField f;
  IdealFamily fam = plane();
  std::vector<std::pair<Subquotient, JointType>> cases = {
      {Subquotient::cyclic(MonomialIdeal(2, {Monomial{1, 1}})), JointType{{1}, 0}},
      {Subquotient::cyclic(MonomialIdeal(2, {Monomial{2, 1}})), JointType{{0}, 1}},
      {Subquotient::ring(2), JointType{{1}, 1}},
  };
  for (const auto& [m, t] : cases) {
    auto c = search(f, fam, m, t, 9);
    GfCheck g = generating_function_check(f, c, fam, m, Box{MultiIndex{2, 2}, MultiIndex{5, 5}});
    EXPECT_EQ(g.outcome, GfOutcome::holds) << m.to_string() << " " << t.to_string();
  }
}
