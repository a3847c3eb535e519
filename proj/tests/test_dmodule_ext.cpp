#include <gtest/gtest.h>

#include "levelt/dmodule_ext.hpp"
#include "levelt/random.hpp"

using namespace levelt;

namespace {

std::vector<GaussianRational> coeffs(std::initializer_list<GaussianRational> v) { return v; }

}  // namespace

TEST(Companion, Examples) {
  const GaussianRational beta(3, 7);
  EXPECT_EQ(companion_of_operator(coeffs({-beta, 1})), (ExactMatrix{{beta}}));
  EXPECT_EQ(companion_of_operator(coeffs({0, 0, 1})), (ExactMatrix{{0, 0}, {1, 0}}));
  EXPECT_EQ(companion_of_operator(coeffs({2, 3, 1})), (ExactMatrix{{0, -2}, {1, -3}}));
  EXPECT_THROW(companion_of_operator(coeffs({2, 3, 2})), std::invalid_argument);
  EXPECT_THROW(companion_of_operator(coeffs({1})), std::invalid_argument);
}

TEST(ExtensionBlock, FirstOrderFactors) {
  const GaussianRational alpha(1, 2), beta(-2, 3);
  const ExtensionBlock b = extension_block(coeffs({-beta, 1}), coeffs({-alpha, 1}));
  EXPECT_EQ(b.a_M, (ExactMatrix{{alpha, 1}, {0, beta}}));
  EXPECT_EQ(b.section, (ExactMatrix{{0}, {1}}));
}

TEST(ExtensionBlock, SecondOrderByFirstOrder) {
  const ExtensionBlock b = extension_block(coeffs({0, 0, 1}), coeffs({0, 1}));
  EXPECT_EQ(b.a_M, (ExactMatrix{{0, 0, 1}, {0, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(b.section, (ExactMatrix{{0, 0}, {1, 0}, {0, 1}}));
}

TEST(ExtensionBlock, BlockStructure) {
  Rng rng(61);
  for (int k = 0; k < 30; ++k) {
    std::vector<GaussianRational> l, lp;
    const long r = rng.uniform(1, 4), rp = rng.uniform(1, 4);
    for (long j = 0; j < r; ++j) l.push_back(rng.gaussian(5, 3));
    for (long j = 0; j < rp; ++j) lp.push_back(rng.gaussian(5, 3));
    l.push_back(1);
    lp.push_back(1);
    const ExtensionBlock b = extension_block(l, lp);
    const auto n = static_cast<std::size_t>(r + rp), m = static_cast<std::size_t>(rp);
    ASSERT_EQ(b.a_M.rows(), n);
    std::size_t coupling = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i < m && j < m) EXPECT_EQ(b.a_M(i, j), b.a_Lp(i, j));
        else if (i >= m && j >= m) EXPECT_EQ(b.a_M(i, j), b.a_L(i - m, j - m));
        else if (i >= m) EXPECT_TRUE(b.a_M(i, j).is_zero());
        else coupling += !b.a_M(i, j).is_zero();
      }
    }
    EXPECT_EQ(coupling, 1u);
    // V(L') is a subrepresentation: the first m basis vectors are stable.
    std::vector<ExactVector> sub;
    for (std::size_t j = 0; j < m; ++j) {
      ExactVector v(n, GaussianRational(0));
      v[j] = 1;
      sub.push_back(v);
    }
    EXPECT_TRUE(is_invariant(b.a_M, Subspace::span(n, sub)));
  }
}

TEST(PsiMap, SendsLastVectorToFirst) {
  const ExtensionBlock b = extension_block(coeffs({1, 2, 3, 1}), coeffs({5, 1, 1}));
  EXPECT_EQ(psi_map(b, {0, 0, 1}), (ExactVector{1, 0}));
  EXPECT_EQ(psi_map(b, {1, 0, 0}), (ExactVector{0, 0}));
  EXPECT_THROW(psi_map(b, {1, 0}), std::invalid_argument);
  Rng rng(67);
  for (int k = 0; k < 50; ++k) {
    ExactVector u;
    for (int j = 0; j < 3; ++j) u.push_back(rng.gaussian(6, 4));
    const ExactVector out = psi_map(b, u);
    EXPECT_EQ(out, (ExactVector{u.back(), 0}));
  }
}

TEST(Counts, Examples) {
  EXPECT_EQ(ext_dimension(2, 3, 0, 0), 2);
  EXPECT_EQ(ext_dimension(1, 2, 0, 0), 0);
  EXPECT_EQ(ext_dimension(3, 4, 2, 0), 8);
  EXPECT_THROW(ext_dimension(2, 3, -1, 0), std::invalid_argument);
  const ParameterCounts a = parameter_counts(2, 3);
  EXPECT_EQ(a.equation_count, 5);
  EXPECT_EQ(a.monodromy_count, 5);
  EXPECT_TRUE(a.rigid);
  const ParameterCounts b = parameter_counts(1, 5);
  EXPECT_EQ(b.equation_count, 4);
  EXPECT_TRUE(b.rigid);
  const ParameterCounts c = parameter_counts(3, 3);
  EXPECT_EQ(c.equation_count, 9);
  EXPECT_EQ(c.monodromy_count, 10);
  EXPECT_FALSE(c.rigid);
}

TEST(Counts, EqualityOnlyInRigidCases) {
  for (long n = 1; n <= 10; ++n)
    for (long s = 1; s <= 10; ++s)
      EXPECT_EQ(parameter_counts(n, s).rigid, n == 1 || (n == 2 && s == 3)) << n << "," << s;
}
