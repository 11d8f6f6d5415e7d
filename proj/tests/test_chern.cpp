#include <gtest/gtest.h>

#include "chowgen/chern.hpp"
#include "chowgen/error.hpp"
#include "chowgen/verify.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace chowgen;

namespace {

Polynomial P(const GradedRingSpec& ring, std::string_view text) { return parse_polynomial(ring, text); }

/// Evaluate the degree-k component of a series over chern_ring(n) at the
/// elementary symmetric functions of the roots.
Integer eval_at_roots(const Polynomial& p, const std::vector<Integer>& roots) {
  const auto e = oracle::elementary(roots);
  return oracle::eval(p, std::vector<Integer>(e.begin() + 1, e.end()));
}

}  // namespace

TEST(ChernSeries, ValidatesConstruction) {
  const GradedRingSpec r = chern_ring(2);
  EXPECT_THROW(ChernSeries(2, P(r, "2 + c1"), 2), InvalidArgument);
  EXPECT_THROW(ChernSeries(0, P(r, "1"), 2), InvalidArgument);
  EXPECT_THROW(ChernSeries(1, P(r, "1 + c1 + c2"), 2), InvalidArgument);
  EXPECT_THROW(ChernSeries(2, P(r, "1 + c1^3"), 2, false), InvalidArgument);
  EXPECT_NO_THROW(ChernSeries(1, P(r, "1 + c1 + c2"), 2, false));
}

TEST(ChernSeries, InvertLineBundle) {
  const GradedRingSpec r = chern_ring(1);
  const ChernSeries inv = invert_series(ChernSeries(1, P(r, "1 + c1"), 4));
  EXPECT_EQ(to_string(inv.series()), "1 - c1 + c1^2 - c1^3 + c1^4");
  EXPECT_FALSE(inv.genuine());
  EXPECT_THROW(inv.with_trunc(5), TruncationTooSmall);
}

TEST(ChernSeries, InvertRankTwo) {
  const GradedRingSpec r = chern_ring(2);
  const ChernSeries inv = invert_series(ChernSeries::generic(r, 2, 3));
  EXPECT_EQ(to_string(inv.series()), "1 - c1 + c1^2 - c2 - c1^3 + 2*c1*c2");
}

TEST(ChernSeries, DualNegatesOddParts) {
  const GradedRingSpec r = chern_ring(3);
  EXPECT_EQ(to_string(dual_chern(ChernSeries::generic(r, 3, 3)).series()), "1 - c1 + c2 - c3");
}

TEST(ChernSeries, TensorLineMatchesRoots) {
  const GradedRingSpec r({{"c1", 1}, {"c2", 2}, {"c3", 3}, {"t", 1}});
  const ChernSeries e = ChernSeries::generic(r, 3, 3);
  const ChernSeries et = tensor_line(e, 3, Polynomial::variable(r, "t"));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto roots = oracle::random_point(rng, 3, 9);
    const Integer t = oracle::random_point(rng, 1, 9)[0];
    std::vector<Integer> shifted;
    for (const auto& a : roots) shifted.push_back(a + t);
    const auto want = oracle::elementary(shifted);
    const auto el = oracle::elementary(roots);
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(oracle::eval(et.component(k), {el[1], el[2], el[3], t}), want[k]);
  }
  EXPECT_THROW(tensor_line(e, 3, P(r, "2*t^2")), InvalidArgument);
  EXPECT_THROW(tensor_line(e, 2, Polynomial::variable(r, "t")), InvalidArgument);
}

TEST(ChernSeries, WhitneyProductMatchesRoots) {
  const GradedRingSpec r({{"c1", 1}, {"c2", 2}, {"d1", 1}});
  const ChernSeries a = ChernSeries::generic(r, 2, 3);
  const ChernSeries b = ChernSeries::generic(r, 1, 3, "d");
  const ChernSeries ab = series_product(a, b);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = oracle::random_point(rng, 3, 9);
    const auto ea = oracle::elementary({x[0], x[1]});
    const auto want = oracle::elementary(x);
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(oracle::eval(ab.component(k), {ea[1], ea[2], x[2]}), want[k]);
  }
  EXPECT_EQ(series_quotient(ab, b).series(), a.series());
}

// The coefficients listed for A*(3).
TEST(SymPower, RankTwoCubeCoefficients) {
  const ChernSeries s = sym_power_chern(2, 3, 4);
  EXPECT_EQ(s.rank(), 4);
  EXPECT_EQ(to_string(s.component(1)), "6*c1");
  EXPECT_EQ(to_string(s.component(2)), "11*c1^2 + 10*c2");
  EXPECT_EQ(to_string(s.component(3)), "6*c1^3 + 30*c1*c2");
  EXPECT_EQ(to_string(s.component(4)), "18*c1^2*c2 + 9*c2^2");
}

TEST(SymPower, SmallCases) {
  EXPECT_EQ(to_string(sym_power_chern(2, 1, 2).series()), "1 + c1 + c2");
  EXPECT_EQ(to_string(sym_power_chern(2, 0, 2).series()), "1");
  EXPECT_EQ(to_string(sym_power_chern(3, 2, 1).series()), "1 + 4*c1");
  EXPECT_EQ(to_string(sym_power_chern(2, 2, 3).series()), "1 + 3*c1 + 2*c1^2 + 4*c2 + 4*c1*c2");
  EXPECT_THROW(sym_power_chern(4, 2, 2), InvalidArgument);
  EXPECT_THROW(sym_power_chern(2, -1, 2), InvalidArgument);
}

TEST(SymPower, MatchesNumericRoots) {
  std::mt19937_64 rng(5);
  for (int rank : {2, 3})
    for (int d = 1; d <= 5; ++d) {
      const auto sym_rank = static_cast<int>(binomial(rank + d - 1, d).get_si());
      const ChernSeries s = sym_power_chern(rank, d, sym_rank);
      for (int trial = 0; trial < 5; ++trial) {
        const auto roots = oracle::random_point(rng, rank, 5);
        const auto want = oracle::elementary(oracle::sym_roots(roots, d));
        for (int k = 0; k <= sym_rank; ++k)
          EXPECT_EQ(eval_at_roots(s.component(k), roots), want[k]) << "rank " << rank << " d " << d << " k " << k;
      }
    }
}

TEST(SymPower, ClosedFormsUpToTwelve) {
  for (int d = 1; d <= 12; ++d) {
    const auto r = check_sym_closed_form(d);
    EXPECT_TRUE(r.pass) << r.detail;
  }
}

TEST(SymmetricReduce, PowerSums) {
  const GradedRingSpec roots = root_ring(2);
  const Polynomial a = Polynomial::variable(roots, "a"), b = Polynomial::variable(roots, "b");
  EXPECT_EQ(to_string(symmetric_reduce({2, a * a + b * b})), "c1^2 - 2*c2");
  EXPECT_EQ(to_string(symmetric_reduce({2, a * a * a + b * b * b})), "c1^3 - 3*c1*c2");
}

TEST(SymmetricReduce, RejectsAsymmetricInput) {
  const GradedRingSpec roots = root_ring(3);
  try {
    symmetric_reduce({3, Polynomial::variable(roots, "a") * Polynomial::variable(roots, "a")});
    FAIL() << "expected NotSymmetric";
  } catch (const NotSymmetric& e) {
    EXPECT_NE(std::string(e.what()).find("(a b)"), std::string::npos) << e.what();
  }
}

TEST(ThomPorteous, AffineAndProjectiveClasses) {
  const GradedRingSpec r({{"z", 1}, {"L", 1}});
  const Polynomial z = Polynomial::variable(r, "z"), line = Polynomial::variable(r, "L");
  for (int e : {1, 2, 3}) {
    const ChernSeries q(e, power(Polynomial::one(r) + z, static_cast<unsigned>(e)), e);
    EXPECT_EQ(thom_porteous_affine(q), power(z, static_cast<unsigned>(e)));
    EXPECT_EQ(thom_porteous_projective(q, e, line), power(line + z, static_cast<unsigned>(e)));
  }
}

TEST(Pushforward, SegreClasses) {
  const GradedRingSpec r({{"c1", 1}, {"c2", 2}, {"z", 1}});
  const Polynomial z = Polynomial::variable(r, "z");
  const ChernSeries f = ChernSeries::generic(r, 2, 2);
  EXPECT_EQ(to_string(projective_pushforward(z, z, f)), "1");
  EXPECT_EQ(projective_pushforward(Polynomial::one(r), z, f), Polynomial(r));
  EXPECT_EQ(to_string(projective_pushforward(z * z, z, f)), "-c1");
  EXPECT_EQ(to_string(projective_pushforward(z * z * z, z, f)), "c1^2 - c2");
  EXPECT_THROW(projective_pushforward(z, z * Integer(2), f), InvalidArgument);
}

TEST(Pushforward, SegreIdentityForEqualRanks) {
  for (int f : {1, 2, 3}) {
    const auto r = check_segre_identity(f);
    EXPECT_TRUE(r.pass) << r.detail;
  }
}

TEST(Properties, InversionRoundTrip) {
  const auto o = properties::inversion_round_trip(41, 100);
  EXPECT_TRUE(o.ok) << o.failure;
}

TEST(Properties, SymmetricReduceRoundTrip) {
  const auto o = properties::symmetric_round_trip(43, 100);
  EXPECT_TRUE(o.ok) << o.failure;
}

TEST(Properties, ProofChain) {
  const auto o = properties::proof_chain();
  EXPECT_TRUE(o.ok) << o.failure;
}
