#include <gtest/gtest.h>

#include "levelt/hypergeometric.hpp"
#include "levelt/random.hpp"
#include "levelt/theta_operator.hpp"
#include "oracles.hpp"

using namespace levelt;

namespace {

const ThetaOperator t = ThetaOperator::theta();
const ThetaOperator z = ThetaOperator::z();

ThetaOperator random_operator(Rng& rng, long max_z, long max_theta) {
  ThetaOperator p;
  for (long j = 0; j <= max_z; ++j)
    for (long k = 0; k <= max_theta; ++k)
      if (rng.uniform(0, 2) != 0) p += ThetaOperator::term(rng.gaussian(5, 3), j, static_cast<unsigned>(k));
  return p;
}

std::vector<GaussianRational> params(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(ThetaOperator, RewriteRule) {
  EXPECT_EQ(t * z, z * t + z);
  EXPECT_EQ((t + 4) * z, z * t + ThetaOperator(5) * z);
  const ThetaOperator p = ThetaOperator::parse("3*z^2*t^2-t+1/2");
  EXPECT_EQ(p * ThetaOperator(1), p);
  EXPECT_EQ(ThetaOperator(1) * p, p);
}

TEST(ThetaOperator, ZeroHasMinusInfinityDegree) {
  EXPECT_EQ(ThetaOperator().theta_degree(), kMinusInfinity);
  EXPECT_EQ((t - t).terms().size(), 0u);
}

TEST(ThetaOperator, ParseAndRender) {
  EXPECT_EQ(ThetaOperator::parse("(1-z)*t^2*(t-2)"), (ThetaOperator(1) - z) * t * t * (t - 2));
  EXPECT_EQ(ThetaOperator::parse("t*z"), z * t + z);
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const ThetaOperator p = random_operator(rng, 3, 3);
    EXPECT_EQ(ThetaOperator::parse(p.str()), p) << p.str();
  }
  EXPECT_THROW(ThetaOperator::parse("t+"), std::invalid_argument);
}

TEST(ThetaOperator, ProductAgreesWithActionOracle) {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const ThetaOperator p = random_operator(rng, 4, 4);
    const ThetaOperator q = random_operator(rng, 4, 4);
    EXPECT_TRUE(oracle::product_matches(p, q, p * q));
  }
}

TEST(ThetaOperator, RingAxioms) {
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    const ThetaOperator a = random_operator(rng, 4, 4), b = random_operator(rng, 4, 4), c = random_operator(rng, 4, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).theta_degree(), a.theta_degree() + b.theta_degree());
      EXPECT_EQ((a * b).z_degree(), a.z_degree() + b.z_degree());
    }
  }
}

TEST(ThetaOperator, RewriteConfluence) {
  // theta^k z^j normalized by different associations.
  for (unsigned k = 0; k <= 4; ++k) {
    for (long j = 0; j <= 4; ++j) {
      const ThetaOperator left = op_pow(t, k) * ThetaOperator::z(j);
      ThetaOperator stepwise = ThetaOperator::z(j);
      for (unsigned s = 0; s < k; ++s) stepwise = t * stepwise;
      ThetaOperator other = op_pow(t, k);
      for (long s = 0; s < j; ++s) other = other * z;
      EXPECT_EQ(left, stepwise);
      EXPECT_EQ(left, other);
      // theta^k z^j = z^j (theta + j)^k
      EXPECT_EQ(left, ThetaOperator::z(j) * op_pow(t + j, k));
    }
  }
}

TEST(ThetaOperator, ContiguityShiftIdentity) {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const GaussianRational delta = rng.gaussian(9, 7);
    EXPECT_EQ(ThetaOperator::theta_plus(delta - 1) * z, z * ThetaOperator::theta_plus(delta));
  }
}

TEST(RightDivide, Examples) {
  const RightDivision d = right_divide(t * t, t);
  EXPECT_EQ(d.quotient, RationalThetaOperator(t));
  EXPECT_TRUE(d.remainder.is_zero());
  const ThetaOperator fixture = expand_hypergeometric(params({0, 0, -2}), params({1, 1, -1}));
  EXPECT_TRUE(right_divide(fixture, t).remainder.is_zero());
  EXPECT_THROW(right_divide(t, ThetaOperator()), std::invalid_argument);
}

TEST(RightDivide, RoundTrip) {
  Rng rng(13);
  for (int k = 0; k < 200; ++k) {
    const ThetaOperator qt = random_operator(rng, 2, 2);
    ThetaOperator d = random_operator(rng, 2, 2);
    if (d.is_zero()) d = t + 1;
    ThetaOperator r;
    for (int s = 0; s < d.theta_degree(); ++s) r += ThetaOperator::term(rng.gaussian(4, 3), rng.uniform(0, 2), static_cast<unsigned>(s));
    const ThetaOperator p = qt * d + r;
    const RightDivision div = right_divide(p, d);
    EXPECT_EQ(div.quotient * d + div.remainder, RationalThetaOperator(p));
    EXPECT_LT(div.remainder.theta_degree(), d.theta_degree());
    // Uniqueness: the lifted quotient and remainder are the constructed ones.
    EXPECT_EQ(div.quotient, RationalThetaOperator(qt));
    EXPECT_EQ(div.remainder, RationalThetaOperator(r));
  }
}

TEST(RightGcd, Examples) {
  EXPECT_EQ(right_gcd(t * (t - 1), t - 1), RationalThetaOperator(t - 1));
  EXPECT_EQ(right_gcd(t * t, t + 1), RationalThetaOperator(ThetaOperator(1)));
  EXPECT_THROW(right_gcd(ThetaOperator(), ThetaOperator()), std::invalid_argument);
  const auto a = params({0, 0}), b = params({0, 0});
  const std::vector<GaussianRational> alpha{GaussianRational(1, 3) + 2, GaussianRational(1, 5) + 2};
  const std::vector<GaussianRational> beta{GaussianRational(1, 2) + 2, GaussianRational(3, 7) + 2};
  EXPECT_EQ(right_gcd(ThetaOperator::z(2), expand_hypergeometric(alpha, beta)).theta_degree(), 0);
}

TEST(RightGcd, RecoversPlantedCommonFactor) {
  Rng rng(17);
  for (int k = 0; k < 30; ++k) {
    const ThetaOperator g = t + rng.gaussian(5, 3);
    const ThetaOperator a = (t + rng.gaussian(5, 3) + z) * g;
    const ThetaOperator b = (z * t + rng.gaussian(5, 3)) * g;
    const RationalThetaOperator gcd = right_gcd(a, b);
    EXPECT_TRUE(right_divide(a, gcd).remainder.is_zero());
    EXPECT_TRUE(right_divide(b, gcd).remainder.is_zero());
    EXPECT_TRUE(right_divide(gcd, g).remainder.is_zero());
  }
}

TEST(LeftFactorCheck, Examples) {
  const ThetaOperator inner = t * t * (t - 2);
  const auto q = left_factor_check((ThetaOperator(1) - z) * inner, ThetaOperator(1) - z);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, inner);
  EXPECT_FALSE(left_factor_check(t, z).has_value());
  EXPECT_THROW(left_factor_check(t, ThetaOperator()), std::invalid_argument);
  Rng rng(19);
  for (int k = 0; k < 50; ++k) {
    const ThetaOperator f = random_operator(rng, 2, 2), g = random_operator(rng, 2, 2);
    if (f.is_zero()) continue;
    const auto r = left_factor_check(f * g, f);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(f * *r, f * g);
  }
}

TEST(RationalThetaOperator, LeibnizRuleMatchesPolynomialProduct) {
  Rng rng(23);
  for (int k = 0; k < 50; ++k) {
    const ThetaOperator a = random_operator(rng, 3, 3), b = random_operator(rng, 3, 3);
    const auto lifted = RationalThetaOperator(a) * RationalThetaOperator(b);
    const auto back = lifted.to_theta_operator();
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, a * b);
  }
}
