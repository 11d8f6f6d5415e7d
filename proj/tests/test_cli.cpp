#include <gtest/gtest.h>

#include <sstream>

#include "chowgen/serialize.hpp"
#include "cli.hpp"

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = chowgen::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, PresentGoldens) {
  EXPECT_EQ(run({"present", "--family", "hilbert", "--d", "2", "--simplify", "--format", "text"}).out,
            "Z[H]/(3H, H^3)\n");
  EXPECT_EQ(run({"present", "--family", "special-orthogonal", "--n", "3"}).out, "Z[c1,c2,c3]/(c1, 2c3)\n");
  EXPECT_EQ(run({"present", "--family", "hilbert", "--d", "3", "--simplify"}).out,
            "Z[c1,c2]/(2c1, c1^2 + 10c2, c1^2c2, c2^2)\n");
  EXPECT_EQ(run({"present", "--family", "orthogonal", "--k", "2", "--format", "latex"}).out,
            "\\mathbb{Z}[c_{1}, c_{2}] / (2c_{1})\n");
}

TEST(Cli, PresentJsonRoundTrips) {
  const Invocation r = run({"present", "--family", "hilbert", "--d", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  std::vector<std::string> polys;
  for (const auto& rel : j["relations"]) polys.push_back(rel["poly"]);
  EXPECT_EQ(polys, (std::vector<std::string>{"2*c1", "6*c1", "11*c1^2 + 10*c2", "6*c1^3 + 30*c1*c2",
                                             "18*c1^2*c2 + 9*c2^2"}));
  const auto doc = chowgen::presentation_from_json(j);
  EXPECT_EQ(doc.presentation, chowgen::present_hilbert_odd(3));
}

TEST(Cli, Graded) {
  EXPECT_EQ(run({"graded", "--family", "hilbert", "--d", "2", "--max-degree", "4"}).out, "[Z, Z/3, Z/3, 0, 0]\n");
  EXPECT_EQ(run({"graded", "--family", "sl2n", "--n", "4", "--max-degree", "1"}).out, "[Z, Z/4]\n");
  const Invocation d3 = run({"graded", "--family", "hilbert", "--d", "3", "--max-degree", "6"});
  EXPECT_EQ(d3.out.substr(d3.out.size() - 9), "0, 0, 0]\n");
}

TEST(Cli, Chern) {
  EXPECT_EQ(run({"chern", "--rank", "2", "--sym", "3", "--trunc", "2"}).out, "1 + 6*c1 + 11*c1^2 + 10*c2\n");
  EXPECT_EQ(run({"chern", "--rank", "2", "--sym", "1"}).out, "1 + c1 + c2\n");
  EXPECT_EQ(run({"chern", "--rank", "3", "--sym", "2", "--trunc", "1"}).out, "1 + 4*c1\n");
  EXPECT_EQ(run({"chern", "--rank", "1", "--sym", "2"}).out, "1 + 2*c1\n");
  EXPECT_EQ(run({"chern", "--rank", "2", "--dual"}).out, "1 - c1 + c2\n");
  EXPECT_EQ(run({"chern", "--rank", "1", "--twist"}).out, "1 + c1 + t\n");
  EXPECT_EQ(run({"chern", "--rank", "1", "--invert", "--trunc", "3"}).out, "1 - c1 + c1^2 - c1^3\n");
  EXPECT_EQ(run({"chern", "--rank", "4"}).code, 2);
  EXPECT_EQ(run({"chern", "--rank", "2", "--trunc", "0"}).code, 2);
}

TEST(Cli, Verify) {
  const Invocation r = run({"verify", "beta-ideal", "--k", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("4/4 checks passed"), std::string::npos);
  EXPECT_EQ(run({"verify", "sym-closed-forms", "--d-max", "12"}).code, 0);
  EXPECT_EQ(run({"verify", "torsion", "--d", "5", "--degrees", "1..6"}).code, 0);
  const Invocation j = run({"verify", "hyperplane", "--d", "4", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["pass"], true);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run({"verify", "torsion", "--degrees", "3"}).code, 2);
}

TEST(Cli, UsageErrorsNameTheConstraint) {
  const Invocation odd = run({"present", "--family", "hilbert-odd", "--d", "4"});
  EXPECT_EQ(odd.code, 2);
  EXPECT_NE(odd.err.find("odd"), std::string::npos);
  EXPECT_EQ(run({"present", "--family", "hilbert", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"present", "--family", "nope", "--d", "2"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"present", "--family", "gl2", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"present", "--family", "gl2", "--c1-zero"}).code, 2);
}

TEST(Cli, GuardExceeded) {
  const Invocation r = run({"graded", "--family", "hilbert", "--d", "6", "--max-degree", "6", "--guard", "3x3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("scale exceeded"), std::string::npos);
  EXPECT_EQ(run({"verify", "cs-membership", "--k", "3"}).code, 3);
  EXPECT_EQ(run({"graded", "--family", "gl2", "--guard", "bad"}).code, 2);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"present", "--family", "hilbert", "--d", "4", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}
