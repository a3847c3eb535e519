#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "levelt/error.hpp"
#include "levelt/monodromy.hpp"
#include "levelt/random.hpp"

using namespace levelt;

namespace {

HGParams make(std::vector<const char*> a, std::vector<const char*> b) {
  HGParams p;
  for (auto* s : a) p.alpha.push_back(GaussianRational::parse(s));
  for (auto* s : b) p.beta.push_back(GaussianRational::parse(s));
  return p;
}

bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

// Irreducible real parameters with denominators <= 12.
HGParams random_irreducible(Rng& rng, std::size_t max_order) {
  for (;;) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, static_cast<long>(max_order)));
    HGParams p;
    for (std::size_t k = 0; k < n; ++k) {
      p.alpha.push_back(GaussianRational(rng.uniform(-24, 24), rng.uniform(1, 12)));
      p.beta.push_back(GaussianRational(rng.uniform(-24, 24), rng.uniform(1, 12)));
    }
    if (!is_reducible(p).reducible) return p;
  }
}

}  // namespace

TEST(LocalSpectra, Examples) {
  const LocalSpectra s = local_spectra(make({"1/2", "1/2"}, {"1", "1"}));
  for (const auto& x : s.at_infinity) EXPECT_TRUE(near(x, -1, 1e-15));
  for (const auto& x : s.at_zero) EXPECT_TRUE(near(x, 1, 1e-15));
  for (const auto& x : s.at_one) EXPECT_TRUE(near(x, 1, 1e-15));
  const LocalSpectra e = local_spectra(make({"1/3", "2/7"}, {"1/3", "2/7"}));
  for (const auto& x : e.at_one) EXPECT_TRUE(near(x, 1, 1e-15));
  EXPECT_THROW(local_spectra(make({"1/2+i", "1/3"}, {"1", "1"})), PreconditionError);
}

TEST(LocalSpectra, ProductOverAllPointsIsOne) {
  const LocalSpectra s = local_spectra(make({"1/3", "2/3"}, {"1/2", "1"}));
  Complex prod = 1;
  for (const auto* l : {&s.at_zero, &s.at_one, &s.at_infinity})
    for (const auto& x : *l) {
      EXPECT_NEAR(std::abs(x), 1.0, 1e-15);
      prod *= x;
    }
  EXPECT_TRUE(near(prod, 1, 1e-12));
}

TEST(BuildMonodromy, QuarterTurnFixture) {
  const MonodromyTriple t = build_monodromy(make({"1/4", "3/4"}, {"1/2", "1"}), 1e-10);
  FloatMatrix a(2, 2);
  a << 0, -1, 1, 0;
  EXPECT_LE(max_abs(t.minf - a), 1e-15);
  EXPECT_LE(t.residual, 1e-10);
  EXPECT_THROW(build_monodromy(make({"1/2", "1/3"}, {"3/2", "1/5"}), 1e-10), PreconditionError);
}

TEST(NumericCharPoly, MatchesCompanionCoefficients) {
  const std::vector<Complex> roots{{0, 1}, {0, -1}, {-1, 0}};
  const std::vector<Complex> c = poly_from_roots(roots);
  const std::vector<Complex> d = numeric_char_poly(companion_from_coefficients(c));
  ASSERT_EQ(c.size(), d.size());
  for (std::size_t k = 0; k < c.size(); ++k) EXPECT_TRUE(near(c[k], d[k], 1e-13));
  // (X - i)(X + i)(X + 1) = X^3 + X^2 + X + 1
  for (const auto& x : c) EXPECT_TRUE(near(x, 1, 1e-15));
}

TEST(PseudoReflectionNumeric, Examples) {
  EXPECT_FALSE(check_pseudo_reflection_numeric(FloatMatrix::Identity(3, 3), 1e-8));
  FloatMatrix d = FloatMatrix::Identity(3, 3);
  d(2, 2) = -1;
  EXPECT_TRUE(check_pseudo_reflection_numeric(d, 1e-8));
  const MonodromyTriple t = build_monodromy(make({"1/3", "1/5", "1/7"}, {"1/2", "1/4", "1"}), 1e-10);
  EXPECT_TRUE(check_pseudo_reflection_numeric(t.m1, 1e-8));
}

TEST(BuildMonodromy, RandomProperties) {
  Rng rng(113);
  for (int k = 0; k < 50; ++k) {
    const HGParams p = random_irreducible(rng, 6);
    const MonodromyTriple t = build_monodromy(p, 1e-10);
    const auto n = static_cast<Eigen::Index>(p.order());
    EXPECT_LE(max_abs(t.minf * t.m1 * t.m0 - FloatMatrix::Identity(n, n)), 1e-10);

    // Spectrum of m_inf through its characteristic polynomial.
    std::vector<Complex> roots;
    for (const auto& a : p.alpha) roots.push_back(std::polar(1.0, 2 * M_PI * a.re().get_d()));
    const std::vector<Complex> expected = poly_from_roots(roots);
    const std::vector<Complex> actual = numeric_char_poly(t.minf);
    for (std::size_t j = 0; j < expected.size(); ++j) EXPECT_TRUE(near(expected[j], actual[j], 1e-8));

    // Spectrum of m0 is exp(2 pi i (1 - beta)).
    std::vector<Complex> zero_roots;
    for (const auto& b : p.beta) zero_roots.push_back(std::polar(1.0, -2 * M_PI * b.re().get_d()));
    const std::vector<Complex> z_expected = poly_from_roots(zero_roots);
    const std::vector<Complex> z_actual = numeric_char_poly(t.m0);
    for (std::size_t j = 0; j < z_expected.size(); ++j) EXPECT_TRUE(near(z_expected[j], z_actual[j], 1e-8));

    double phase = 0;
    for (std::size_t j = 0; j < p.order(); ++j) phase += (p.beta[j] - p.alpha[j]).re().get_d();
    EXPECT_TRUE(near(t.m1.determinant(), std::polar(1.0, 2 * M_PI * phase), 1e-8));
    EXPECT_TRUE(check_pseudo_reflection_numeric(t.m1, 1e-8));
    EXPECT_TRUE(rigidity_check_numeric(t, 1e-8, static_cast<std::uint64_t>(k)));
  }
}

TEST(RigidityNumeric, GaussFixture) {
  const MonodromyTriple t = build_monodromy(make({"1/4", "3/4"}, {"1/2", "1"}), 1e-10);
  EXPECT_TRUE(rigidity_check_numeric(t, 1e-8, 1));
}
