#include <gtest/gtest.h>

#include "util.hpp"

using namespace mixmult;

namespace {

IdealFamily plane() { return IdealFamily(MonomialIdeal::maximal(2), {MonomialIdeal::maximal(2)}); }

Polynomial<PrimeField> poly(const PrimeField& f, std::size_t m, std::vector<std::pair<Monomial, std::uint64_t>> terms) {
  Polynomial<PrimeField> x(m);
  for (auto& [u, c] : terms) x.add_term(f, u, c);
  return x;
}

}  // namespace

TEST(JointType, Conversions) {
  JointType t = JointType::from_type_index(TypeIndex{1, 2, 0});
  EXPECT_EQ(t.j_count, 2);
  EXPECT_EQ(t.k, (std::vector<std::int64_t>{2, 0}));
  EXPECT_EQ(t.type_index(), (TypeIndex{1, 2, 0}));
  EXPECT_EQ(t.f_order(), (MultiIndex{2, 2, 0}));
  EXPECT_EQ(t.size(), 4);
  EXPECT_EQ(t.to_string(), "((2,0),2)");
  auto preds = t.predecessors();
  ASSERT_EQ(preds.size(), 2u);
  EXPECT_EQ(preds[0], (JointType{{1, 0}, 2}));
  EXPECT_EQ(preds[1], (JointType{{2, 0}, 1}));
  EXPECT_EQ((JointType{{1}, 0}).type_index(), std::nullopt);
  EXPECT_THROW(JointType::from_type_index(TypeIndex{1}), InputError);
}

TEST(Candidate, Validation) {
  PrimeField f;
  IdealFamily fam(MonomialIdeal::maximal(2), {MonomialIdeal(2, {Monomial{1, 0}})});
  ReductionCandidate<PrimeField> c;
  c.lists = {{poly(f, 2, {{Monomial{1, 0}, 1}})}, {poly(f, 2, {{Monomial{0, 1}, 1}})}};
  EXPECT_THROW(validate_candidate(c, fam), InputError);  // y is not in (x)
  c.lists[1][0] = poly(f, 2, {{Monomial{1, 1}, 3}, {Monomial{2, 0}, 1}});
  EXPECT_NO_THROW(validate_candidate(c, fam));
  c.lists.pop_back();
  EXPECT_THROW(validate_candidate(c, fam), InputError);
}

// Nakayama test against graded linear algebra, for random homogeneous
// candidates of several types, including degenerate ones.
TEST(JointReduction, NakayamaMatchesGradedOracle) {
  PrimeField f;
  Rng rng(4);
  struct Setup {
    oracle::Family ofam;
    oracle::Gens den;
  };
  auto m2 = testutil::maximal(2), m3 = testutil::maximal(3);
  std::vector<Setup> setups = {
      {{2, m2, {m2}}, {}},
      {{2, m2, {m2}}, {{1, 1}}},
      {{2, m2, {{{1, 0}}, {{0, 1}}}}, {}},
      {{3, m3, {m3}}, {}},
      {{3, m3, {m3}}, {{1, 0, 1}, {0, 1, 1}}},
  };
  int agree = 0, holds = 0, fails = 0;
  for (const Setup& s : setups) {
    std::vector<MonomialIdeal> ideals;
    for (const auto& g : s.ofam.ideals) ideals.push_back(testutil::to_ideal(g, s.ofam.m));
    IdealFamily fam(testutil::to_ideal(s.ofam.j, s.ofam.m), ideals);
    Subquotient mod(MonomialIdeal::unit(s.ofam.m), testutil::to_ideal(s.den, s.ofam.m));
    const std::size_t dims = ideals.size() + 1;
    for (const TypeIndex& ti : Box{MultiIndex::filled(dims, 0), MultiIndex::filled(dims, dims == 2 ? 2 : 1)}.cells()) {
      JointType jt = JointType::from_type_index(ti);
      for (int rep = 0; rep < 2; ++rep) {
        ReductionCandidate<PrimeField> c = random_candidate(f, fam, jt, rng);
        if (rep == 1 && !c.lists[0].empty()) c.lists[0].back() = c.lists[0].front();  // repeated element
        auto elems = testutil::to_elements(c);
        for (const MultiIndex& cell : Box{MultiIndex::filled(dims, 1), MultiIndex::filled(dims, 3)}.cells()) {
          bool lib = joint_reduction_at(f, c, fam, mod, cell);
          bool ref = oracle::graded_reduction_at(s.ofam, oracle::unit(s.ofam.m), s.den, elems, testutil::ints(cell), 32003);
          ASSERT_EQ(lib, ref) << jt.to_string() << " at " << cell.to_string();
          ++agree;
          (lib ? holds : fails)++;
        }
      }
    }
  }
  EXPECT_GT(holds, 20);
  EXPECT_GT(fails, 20);
  EXPECT_GT(agree, 100);
}

TEST(JointReduction, PlaneSearch) {
  PrimeField f;
  Rng rng(2);
  IdealFamily fam = plane();
  Box w = default_window(fam, Subquotient::ring(2));
  EXPECT_TRUE(find_joint_reduction(f, fam, Subquotient::ring(2), JointType{{0}, 2}, w, rng).found());
  EXPECT_TRUE(find_joint_reduction(f, fam, Subquotient::ring(2), JointType{{1}, 1}, w, rng).found());
  EXPECT_TRUE(find_joint_reduction(f, fam, Subquotient::ring(2), JointType{{2}, 0}, w, rng).found());
  auto none = find_joint_reduction(f, fam, Subquotient::ring(2), JointType{{0}, 1}, w, rng, 4);
  EXPECT_FALSE(none.found());
  EXPECT_EQ(none.attempt_log.size(), 5u);
}

// x, y is a joint reduction of type ((0),2); x, x is not.
TEST(JointReduction, ExplicitCandidates) {
  PrimeField f;
  IdealFamily fam = plane();
  Box w = default_window(fam, Subquotient::ring(2));
  ReductionCandidate<PrimeField> good{{{poly(f, 2, {{Monomial{1, 0}, 1}}), poly(f, 2, {{Monomial{0, 1}, 1}})}, {}}};
  EXPECT_TRUE(is_joint_reduction(f, good, fam, Subquotient::ring(2), w).holds);
  ReductionCandidate<PrimeField> bad{{{poly(f, 2, {{Monomial{1, 0}, 1}}), poly(f, 2, {{Monomial{1, 0}, 2}})}, {}}};
  ReductionCertificate cert = is_joint_reduction(f, bad, fam, Subquotient::ring(2), w);
  EXPECT_FALSE(cert.holds);
  ASSERT_TRUE(cert.failing_cell.has_value());
  EXPECT_EQ(*cert.failing_cell, w.lo);
}

TEST(JointReduction, WorksOverRationals) {
  RationalField q;
  Rng rng(8);
  IdealFamily fam = plane();
  Box w = default_window(fam, Subquotient::ring(2));
  auto s = find_joint_reduction(q, fam, Subquotient::ring(2), JointType{{1}, 1}, w, rng);
  ASSERT_TRUE(s.found());
  EXPECT_FALSE(find_joint_reduction(q, fam, Subquotient::ring(2), JointType{{1}, 0}, w, rng, 3).found());
}

TEST(Minimality, PlaneTypes) {
  PrimeField f;
  Rng rng(6);
  IdealFamily fam = plane();
  Box w = default_window(fam, Subquotient::ring(2));
  auto two = find_joint_reduction(f, fam, Subquotient::ring(2), JointType{{0}, 2}, w, rng);
  ASSERT_TRUE(two.found());
  MinimalityReport r = is_minimal_joint_reduction(f, *two.candidate, fam, Subquotient::ring(2), w, rng);
  EXPECT_TRUE(r.is_reduction);
  EXPECT_TRUE(r.minimal);
  EXPECT_EQ(r.e, 1);
  EXPECT_EQ(r.agrees_with_positivity, true);

  auto three = find_joint_reduction(f, fam, Subquotient::ring(2), JointType{{1}, 2}, w, rng);
  ASSERT_TRUE(three.found());
  MinimalityReport r3 = is_minimal_joint_reduction(f, *three.candidate, fam, Subquotient::ring(2), w, rng);
  EXPECT_FALSE(r3.minimal);
  EXPECT_EQ(r3.e, 0);
  EXPECT_EQ(r3.agrees_with_positivity, true);
}

// ---------------------------------------------------------------------------
// weak-(FC)

TEST(WeakFC, GenericLinearFormOnPlane) {
  PrimeField f;
  Rng rng(12);
  IdealFamily fam = plane();
  Box w{MultiIndex{1, 1}, MultiIndex{3, 3}};
  auto x = generic_element(f, MonomialIdeal::maximal(2), rng);
  FCWitness fc = weak_fc_check(f, x, 1, fam, Subquotient::ring(2), w);
  EXPECT_FALSE(fc.exact);
  EXPECT_TRUE(fc.stable);
  EXPECT_TRUE(fc.fc1_holds);
  EXPECT_TRUE(fc.fc2);
}

// On R/(xy) the variable x kills y, which is not I-torsion: FC2 fails. A
// generic form avoids the minimal primes and passes.
TEST(WeakFC, ZeroDivisorFailsFC2) {
  PrimeField f;
  Rng rng(13);
  IdealFamily fam = plane();
  Box w{MultiIndex{1, 1}, MultiIndex{3, 3}};
  Subquotient m = Subquotient::cyclic(MonomialIdeal(2, {Monomial{1, 1}}));
  FCWitness var = weak_fc_check(f, poly(f, 2, {{Monomial{1, 0}, 1}}), 1, fam, m, w);
  EXPECT_TRUE(var.exact);
  EXPECT_FALSE(var.fc2);
  FCWitness gen = weak_fc_check(f, generic_element(f, MonomialIdeal::maximal(2), rng), 1, fam, m, w);
  EXPECT_TRUE(gen.fc2);
  EXPECT_TRUE(gen.fc1_holds);
  EXPECT_THROW(weak_fc_check(f, poly(f, 2, {{Monomial{0, 0}, 1}}), 1, fam, m, w), InputError);
  EXPECT_THROW(weak_fc_check(f, poly(f, 2, {{Monomial{1, 0}, 1}}), 2, fam, m, w), InputError);
}

// x = x on R with I = (x): xM meets I^n M in x I^{n-1} M exactly.
TEST(WeakFC, MonomialExactPath) {
  PrimeField f;
  MonomialIdeal xi(2, {Monomial{1, 0}});
  IdealFamily fam(MonomialIdeal::maximal(2), {xi});
  FCWitness w = weak_fc_check(f, poly(f, 2, {{Monomial{1, 0}, 1}}), 1, fam, Subquotient::ring(2),
                              Box{MultiIndex{1, 1}, MultiIndex{3, 3}});
  EXPECT_TRUE(w.exact);
  EXPECT_TRUE(w.fc1_holds);
  EXPECT_TRUE(w.fc2);
  // x^2 M meets I^n M in x^n M, bigger than x^2 I^{n-1} M
  FCWitness sq = weak_fc_check(f, poly(f, 2, {{Monomial{2, 0}, 1}}), 1, fam, Subquotient::ring(2),
                               Box{MultiIndex{1, 1}, MultiIndex{3, 3}});
  EXPECT_FALSE(sq.fc1_holds);
}

TEST(Maximality, PlaneSequences) {
  PrimeField f;
  Rng rng(14);
  IdealFamily fam = plane();
  std::vector<Polynomial<PrimeField>> seq{generic_element(f, MonomialIdeal::maximal(2), rng)};
  MaximalityReport one = maximality_check(f, seq, fam, Subquotient::ring(2));
  EXPECT_TRUE(one.before_not_nilpotent);
  EXPECT_FALSE(one.after_nilpotent);
  EXPECT_FALSE(one.maximal);
  seq.push_back(generic_element(f, MonomialIdeal::maximal(2), rng));
  MaximalityReport two = maximality_check(f, seq, fam, Subquotient::ring(2));
  EXPECT_TRUE(two.before_not_nilpotent);
  EXPECT_TRUE(two.after_nilpotent);
  EXPECT_TRUE(two.maximal);
  EXPECT_THROW(maximality_check(f, std::vector<Polynomial<PrimeField>>{}, fam, Subquotient::ring(2)), InputError);
}
