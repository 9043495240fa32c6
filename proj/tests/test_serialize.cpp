#include <gtest/gtest.h>

#include <sstream>

#include "upoly/serialize.hpp"
#include "upoly/verify.hpp"

using namespace upoly;

namespace {

std::string csv(const CharTable& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

std::string json(const CharTable& t) {
  std::ostringstream os;
  write_json(os, t);
  return os.str();
}

}  // namespace

TEST(Spec, Defaults) {
  const auto s = parse_spec(std::string(R"({"beta": [2, 1]})"));
  EXPECT_EQ(s.q, 2);
  EXPECT_EQ(s.beta, (std::vector<int>{2, 1}));
  EXPECT_TRUE(s.poset_is_chain);
  EXPECT_EQ(s.make_poset(), Poset::chain(2));
  EXPECT_EQ(s.budget, kDefaultBudget);
}

TEST(Spec, PosetForms) {
  EXPECT_EQ(parse_spec(std::string(R"({"beta": [1,1,1], "poset": "empty"})")).make_poset(), Poset::empty(3));
  EXPECT_EQ(parse_spec(std::string(R"({"beta": [1,1,1], "poset": "chain"})")).make_poset(), Poset::chain(3));
  const auto spec = parse_spec(std::string(R"({"q": 3, "beta": [4,1,2], "poset": [[1,3],[2,3]], "budget": 99})"));
  EXPECT_EQ(spec.q, 3);
  EXPECT_EQ(spec.budget, 99U);
  EXPECT_EQ(spec.polytope().cells(), (std::vector<Cell>{{1, 3}, {2, 3}}));
  const auto closed = parse_spec(std::string(R"({"beta": [1,1,1], "poset": [[1,2],[2,3]], "close": true})"));
  EXPECT_EQ(closed.make_poset(), Poset::chain(3));
}

TEST(Spec, Errors) {
  EXPECT_THROW(parse_spec(std::string("{")), ValidationError);
  EXPECT_THROW(parse_spec(std::string("[1]")), ValidationError);
  EXPECT_THROW(parse_spec(std::string(R"({"q": 2})")), ValidationError);
  EXPECT_THROW(parse_spec(std::string(R"({"beta": [1, "x"]})")), ValidationError);
  EXPECT_THROW(parse_spec(std::string(R"({"beta": [1, 1], "q": 1})")), ValidationError);
  EXPECT_THROW(parse_spec(std::string(R"({"beta": [1, 1], "q": "two"})")), ValidationError);
  EXPECT_THROW(parse_spec(std::string(R"({"beta": [1, 1], "poset": "tree"})")), ValidationError);
  EXPECT_THROW(parse_spec(std::string(R"({"beta": [1, 1], "poset": [[1, 2, 3]]})")), ValidationError);
  // Parses, but the relation is not transitive without the closure flag.
  const auto open = parse_spec(std::string(R"({"beta": [1,1,1], "poset": [[1,2],[2,3]]})"));
  EXPECT_THROW(open.make_poset(), ValidationError);
  // Transitive but not normal.
  const auto bad = parse_spec(std::string(R"({"beta": [1,1,1], "poset": [[2,3]]})"));
  EXPECT_THROW(bad.polytope(), ValidationError);
  EXPECT_THROW(parse_spec(std::string(R"({"beta": [0, 1]})")).polytope(), ValidationError);
}

TEST(Csv, Layout) {
  const UnipotentPolytope line(Composition({1, 1}), Poset::chain(2));
  EXPECT_EQ(csv(char_table(line, 2)),
            "lambda,degree,\"0\",\"1,2:1\"\n"
            "class_size,,1,1\n"
            "\"0\",1,1,1\n"
            "\"1,2:1\",1,1,-1\n");
  const UnipotentPolytope two(Composition({2, 1}), Poset::chain(2));
  EXPECT_EQ(csv(char_table(two, 2)),
            "lambda,degree,\"0\",\"1,2:1\"\n"
            "class_size,,1,3\n"
            "\"0\",1,1,1\n"
            "\"1,2:1\",3,3,-1\n");
}

TEST(Json, Layout) {
  const UnipotentPolytope line(Composition({1, 1}), Poset::chain(2));
  const auto j = to_json(char_table(line, 3));
  EXPECT_EQ(j.dump(),
            R"({"beta":[1,1],"poset":[[1,2]],"q":3,"index":["0","1,2:1"],"degrees":["1","2"],)"
            R"("class_sizes":["1","2"],"values":[["1","1"],["2","-1"]]})");
  const auto round = nlohmann::json::parse(json(char_table(line, 3)));
  EXPECT_EQ(round.at("values").at(1).at(1).get<std::string>(), "-1");
}

TEST(Output, ByteIdenticalAcrossRuns) {
  const UnipotentPolytope poly(Composition({2, 1, 2}), Poset::chain(3));
  const auto a = char_table(poly, 3);
  const auto b = char_table(poly, 3);
  EXPECT_EQ(csv(a), csv(b));
  EXPECT_EQ(json(a), json(b));
}

TEST(Verify, SuitesPassOnSmallShapes) {
  const UnipotentPolytope chain3(Composition({1, 1, 1}), Poset::chain(3));
  EXPECT_TRUE(verify_orthogonality(UnipotentPolytope(Composition({2, 1}), Poset::chain(2)), 2).ok());
  const auto o = verify_oracle(chain3, 2);
  EXPECT_TRUE(o.ok());
  EXPECT_EQ(o.checks.front().name, "5x5 table matches the oracle");
  EXPECT_TRUE(verify_stats(chain3, 2).ok());
  EXPECT_TRUE(verify_kernels(Composition({1, 2, 1})).ok());
  EXPECT_TRUE(verify_bijections(5).ok());
}

TEST(Verify, ReportsTheFirstFailure) {
  Report r;
  r.add("a", true);
  r.add("b", false, "x");
  r.add("c", false, "y");
  EXPECT_FALSE(r.ok());
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->detail, "x");
}
