#include <gtest/gtest.h>

#include <cstdlib>

#include "chowgen/chern.hpp"
#include "chowgen/error.hpp"
#include "chowgen/grstruct.hpp"

using namespace chowgen;

namespace {

Presentation truncated_h() {
  const GradedRingSpec r({{"H", 1}});
  return Presentation(r, {{"3H", parse_polynomial(r, "3*H")}, {"H^3", parse_polynomial(r, "H^3")}}, "test");
}

}  // namespace

TEST(MonomialBasis, LexDescendingWithinDegree) {
  const GradedRingSpec r = chern_ring(2);
  const auto b = monomial_basis(r, 2);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(to_string(Polynomial::term(r, b[0], 1)), "c1^2");
  EXPECT_EQ(to_string(Polynomial::term(r, b[1], 1)), "c2");
  EXPECT_EQ(monomial_basis(r, 0).size(), 1u);
  EXPECT_EQ(monomial_basis(chern_ring(3), 6).size(), 7u);
  EXPECT_THROW(monomial_basis(r, -1), InvalidArgument);
}

TEST(MonomialBasis, CountsMatchPartitions) {
  // Monomials of degree n in Z[c1, c2, c3] = partitions of n into parts <= 3.
  const std::vector<std::size_t> p3{1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(monomial_basis(chern_ring(3), n).size(), p3[n]);
}

TEST(DegreeSlice, RowsAreMultiples) {
  const GradedRingSpec r({{"c1", 1}, {"L", 1}});
  const Polynomial rel = parse_polynomial(r, "c1 - 3*L");
  const DegreeSlice s = degree_slice(r, std::vector<Polynomial>{rel}, 2);
  EXPECT_EQ(s.basis.size(), 3u);
  EXPECT_EQ(s.relation_matrix.rows(), 2u);
  EXPECT_EQ(s.polynomial(r, s.relation_matrix.row(0)), parse_polynomial(r, "c1^2 - 3*c1*L"));
  EXPECT_THROW(s.coordinates(parse_polynomial(r, "c1")), InvalidArgument);
}

TEST(GroupStructure, Rendering) {
  EXPECT_EQ(GroupStructure{}.to_string(), "0");
  EXPECT_EQ((GroupStructure{1, {}}).to_string(), "Z");
  EXPECT_EQ((GroupStructure{2, {}}).to_string(), "Z^2");
  EXPECT_EQ((GroupStructure{1, {2}}).to_string(), "Z ⊕ Z/2");
  EXPECT_EQ((GroupStructure{0, {2, 4}}).to_latex(), "\\mathbb{Z}/2 \\oplus \\mathbb{Z}/4");
}

TEST(GradedGroups, TruncatedPolynomialRing) {
  EXPECT_EQ(graded_groups(truncated_h(), 8).to_string(), "[Z, Z/3, Z/3, 0, 0, 0, 0, 0, 0]");
}

TEST(GradedGroups, SlTwoN) {
  const GradedRingSpec r = chern_ring(2);
  const Presentation p(r, {{"4c1", parse_polynomial(r, "4*c1")}}, "test");
  EXPECT_EQ(graded_groups(p, 1).to_string(), "[Z, Z/4]");
  EXPECT_EQ(graded_group(p, 2).to_string(), "Z ⊕ Z/4");
}

TEST(GradedGroups, TorsionCheck) {
  EXPECT_TRUE(torsion_check(truncated_h(), 1, 10));
  const GradedRingSpec r = chern_ring(2);
  EXPECT_FALSE(torsion_check(Presentation(r, {{"2c1", parse_polynomial(r, "2*c1")}}, "t"), 1, 3));
  EXPECT_THROW(torsion_check(truncated_h(), 0, 3), InvalidArgument);
}

TEST(ResourceGuard, ParseAndLimits) {
  const ResourceGuard g = ResourceGuard::parse("10x3");
  EXPECT_EQ(g.max_rows, 10u);
  EXPECT_EQ(g.max_basis, 3u);
  EXPECT_THROW(ResourceGuard::parse("10"), InvalidArgument);
  EXPECT_THROW(ResourceGuard::parse("ax3"), InvalidArgument);
  const GradedRingSpec r = chern_ring(3);
  EXPECT_THROW(degree_slice(r, std::vector<Polynomial>{}, 6, g), ScaleExceeded);
  const std::vector<Polynomial> rels{parse_polynomial(r, "c1")};
  EXPECT_THROW(degree_slice(r, rels, 12, ResourceGuard::parse("5x1000")), ScaleExceeded);
}

TEST(ResourceGuard, FromEnvironment) {
  setenv("CHOWGEN_GUARD", "7x9", 1);
  const ResourceGuard g = ResourceGuard::from_env();
  EXPECT_EQ(g.max_rows, 7u);
  EXPECT_EQ(g.max_basis, 9u);
  unsetenv("CHOWGEN_GUARD");
  EXPECT_EQ(ResourceGuard::from_env().max_rows, ResourceGuard{}.max_rows);
}
