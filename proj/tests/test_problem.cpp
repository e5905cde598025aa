#include <gtest/gtest.h>

#include <filesystem>

#include "mixmult/problem.hpp"
#include "util.hpp"

using namespace mixmult;

namespace {

const char* kPlane = R"({
  "schema_version": 1,
  "ring": {"variables": ["x", "y"]},
  "module": {"num": "unit", "den": []},
  "J": [[1, 0], [0, 1]],
  "ideals": [[[1, 0], [0, 1]]]
})";

std::string with(const std::string& key, const std::string& value) {
  auto doc = nlohmann::json::parse(kPlane);
  doc[key] = nlohmann::json::parse(value);
  return doc.dump();
}

}  // namespace

TEST(Problem, ParsesMinimalInput) {
  Problem p = parse_problem(kPlane);
  EXPECT_EQ(p.num_vars(), 2u);
  EXPECT_EQ(p.module, Subquotient::ring(2));
  EXPECT_TRUE(std::holds_alternative<PrimeFieldSpec>(p.field));
  EXPECT_EQ(p.seed, 1u);
  EXPECT_FALSE(p.type.has_value());
  EXPECT_TRUE(p.sub().is_zero());
}

TEST(Problem, OptionalFields) {
  Problem p = parse_problem(with("candidate", R"({"J": [[{"coeff": "2", "exps": [1, 0]}, {"coeff": -1, "exps": [0, 1]}]], "ideals": [[]]})"));
  ASSERT_TRUE(p.candidate.has_value());
  PrimeField f;
  auto c = build_candidate(f, *p.candidate, p);
  EXPECT_EQ(c.type(), (JointType{{0}, 1}));
  EXPECT_EQ(c.lists[0][0].terms().at(Monomial{0, 1}), 32002u);
  EXPECT_EQ(parse_problem(with("window", R"({"lo": [1, 2], "hi": [4, 5]})")).window->hi, (MultiIndex{4, 5}));
  EXPECT_EQ(parse_problem(with("type", "[1, 0]")).type, (TypeIndex{1, 0}));
  EXPECT_EQ(parse_problem(with("truncation", "7")).truncation, 7u);
  EXPECT_TRUE(std::holds_alternative<RationalFieldSpec>(
      parse_problem(with("ring", R"({"variables": ["x", "y"], "field": {"rationals": true}})")).field));
  Problem sub = parse_problem(with("submodule", R"({"num": [[1, 0]]})"));
  EXPECT_EQ(sub.sub().num(), MonomialIdeal(2, {Monomial{1, 0}}));
}

TEST(Problem, RejectsBadInput) {
  EXPECT_THROW(parse_problem("{"), InputError);
  EXPECT_THROW(parse_problem(with("schema_version", "2")), InputError);
  EXPECT_THROW(parse_problem(with("colour", "1")), InputError);
  EXPECT_THROW(parse_problem(with("J", "[[1, 0, 0]]")), InputError);
  EXPECT_THROW(parse_problem(with("J", "[[1, 0]]")), InputError);  // not primary
  EXPECT_THROW(parse_problem(with("ideals", "[]")), InputError);
  EXPECT_THROW(parse_problem(with("type", "[1]")), InputError);
  EXPECT_THROW(parse_problem(with("type", "[1, -1]")), InputError);
  EXPECT_THROW(parse_problem(with("window", R"({"lo": [3, 3], "hi": [2, 5]})")), InputError);
  EXPECT_THROW(parse_problem(with("module", R"({"num": [[1, 0]], "den": [[0, 1]]})")), InputError);
  EXPECT_THROW(parse_problem(with("ring", R"({"variables": ["x", "x"]})")), InputError);
  EXPECT_THROW(parse_problem(with("ring", R"({"variables": ["x", "y"], "field": {"prime": 10}})")), InputError);
  EXPECT_THROW(parse_problem(with("truncation", "0")), InputError);
  Problem p = parse_problem(with("candidate", R"({"J": [[{"coeff": "1", "exps": [2, 0]}]], "ideals": [[[{"coeff": "1", "exps": [0, 0]}]]]})"));
  PrimeField f;
  EXPECT_THROW(build_candidate(f, *p.candidate, p), InputError);
}

TEST(Problem, CorpusFilesParse) {
  int n = 0;
  for (const auto& e : std::filesystem::directory_iterator(MIXMULT_CORPUS_DIR)) {
    if (e.path().extension() != ".json") continue;
    Problem p = parse_problem(testutil::read_file(e.path().string()));
    EXPECT_TRUE(p.type.has_value()) << e.path();
    EXPECT_LE(p.num_vars(), 3u);
    EXPECT_LE(p.ideals.size(), 2u);
    ++n;
  }
  EXPECT_GE(n, 10);
}

TEST(Problem, HashIsStable) {
  EXPECT_EQ(hex64(fnv1a("")), "cbf29ce484222325");
  EXPECT_EQ(hex64(fnv1a("a")), "af63dc4c8601ec8c");
}
