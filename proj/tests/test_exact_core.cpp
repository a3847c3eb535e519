#include <gtest/gtest.h>

#include "levelt/matrix.hpp"
#include "levelt/random.hpp"
#include "oracles.hpp"

using namespace levelt;

namespace {

Polynomial poly(std::vector<GaussianRational> c) { return Polynomial(std::move(c)); }

GaussianRational q(const char* s) { return GaussianRational::parse(s); }

ExactVector e(std::size_t n, std::size_t k) {
  ExactVector v(n, GaussianRational(0));
  v[k] = 1;
  return v;
}

}  // namespace

TEST(GaussianRational, CanonicalForm) {
  EXPECT_EQ(GaussianRational(2, 4), GaussianRational(1, 2));
  EXPECT_EQ(GaussianRational(3, -6).str(), "-1/2");
  EXPECT_EQ(q("1/2+1/3*i").str(), "1/2+1/3*i");
  EXPECT_EQ(q("-5/7*i").str(), "-5/7*i");
  EXPECT_EQ(q("2-i").str(), "2-i");
  EXPECT_EQ(q("i") * q("i"), GaussianRational(-1));
  EXPECT_EQ(q("6/4").str(), "3/2");
}

TEST(GaussianRational, FieldOperations) {
  const GaussianRational a = q("1/2+1/3*i"), b = q("-2+5/7*i");
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a * a.conj(), GaussianRational(a.norm()));
  EXPECT_THROW(a / GaussianRational(0), std::domain_error);
  EXPECT_THROW(GaussianRational::parse("1/"), std::invalid_argument);
  EXPECT_TRUE(q("-3").is_integer());
  EXPECT_FALSE(q("3+i").is_integer());
}

TEST(GaussianRational, ParseRoundTrip) {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const GaussianRational x = rng.gaussian(50, 30);
    EXPECT_EQ(GaussianRational::parse(x.str()), x) << x.str();
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(ExactMatrix::identity(3)), 3u);
  EXPECT_EQ(rank(ExactMatrix(3, 3)), 0u);
  const ExactMatrix outer{{1, 2, 3}, {0, 0, 0}, {0, 0, 0}};
  EXPECT_EQ(rank(outer), 1u);
}

TEST(Rank, AgreesWithMinorsOracleAndRankNullity) {
  Rng rng(11);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
    // Product of n x r and r x n has rank <= r, usually exactly r.
    const ExactMatrix m = rng.matrix(n, r, 3, 2) * rng.matrix(r, n, 3, 2);
    EXPECT_EQ(rank(m), oracle::rank(m));
    const Subspace ker = kernel(m);
    EXPECT_EQ(rank(m) + ker.dim(), n);
    for (const auto& v : ker.basis()) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel(ExactMatrix::identity(3)).is_trivial());
  EXPECT_EQ(kernel(ExactMatrix(3, 3)).dim(), 3u);
  const Subspace k = kernel(ExactMatrix::diagonal({1, 0}));
  EXPECT_TRUE(k.same_span(Subspace::span(2, {e(2, 1)})));
}

TEST(CharPoly, Examples) {
  const ExactMatrix companion{{0, -2}, {1, 3}};
  EXPECT_EQ(char_poly(companion), poly({2, -3, 1}));
  EXPECT_EQ(char_poly(ExactMatrix::identity(2)), poly({1, -2, 1}));
  EXPECT_EQ(char_poly(ExactMatrix(2, 2)), Polynomial::monomial(1, 2));
}

TEST(CharPoly, AgreesWithLaplaceOracleAndIsConjugationInvariant) {
  Rng rng(13);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    ExactMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.gaussian(5, 3);
    const Polynomial p = char_poly(m);
    EXPECT_EQ(p, oracle::char_poly(m));
    EXPECT_EQ(char_poly(conjugate(m, rng.invertible(n, 3))), p);
  }
}

TEST(Inverse, RoundTripAndSingular) {
  Rng rng(17);
  for (int k = 0; k < 30; ++k) {
    const ExactMatrix u = rng.invertible(4, 4);
    EXPECT_EQ(u * inverse(u), ExactMatrix::identity(4));
    EXPECT_EQ(determinant(u), GaussianRational(1));
  }
  EXPECT_THROW(inverse(ExactMatrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(poly({-1, 0, 1}), poly({-1, 1})), poly({-1, 1}));
  EXPECT_EQ(poly_gcd(Polynomial::monomial(1, 2), poly({1, 1})), Polynomial(1));
  EXPECT_THROW(poly_gcd(Polynomial(), Polynomial()), std::invalid_argument);
  const ExactMatrix a{{2, 1, 0}, {0, 3, 1}, {0, 0, 5}};
  const ExactMatrix b{{7, 0, 0}, {1, 2, 0}, {4, 4, 1}};
  EXPECT_TRUE(divides(poly({-2, 1}), poly_gcd(char_poly(a), char_poly(b))));
}

TEST(PolyGcd, DividesBothAndIsMonic) {
  Rng rng(19);
  for (int k = 0; k < 100; ++k) {
    std::vector<GaussianRational> common, ra, rb;
    for (long t = rng.uniform(0, 2); t > 0; --t) common.push_back(rng.rational(4, 2));
    for (long t = rng.uniform(0, 3); t > 0; --t) ra.push_back(rng.gaussian(4, 2));
    for (long t = rng.uniform(1, 3); t > 0; --t) rb.push_back(rng.gaussian(4, 2));
    const Polynomial c = Polynomial::from_roots(common);
    const Polynomial p = c * Polynomial::from_roots(ra) * Polynomial(rng.nonzero_gaussian(3, 3));
    const Polynomial r = c * Polynomial::from_roots(rb);
    const Polynomial g = poly_gcd(p, r);
    EXPECT_TRUE(g.is_monic());
    EXPECT_TRUE(divides(g, p));
    EXPECT_TRUE(divides(g, r));
    EXPECT_TRUE(divides(c, g));
  }
}

TEST(Polynomial, DivisionIdentity) {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    std::vector<GaussianRational> pc, dc;
    for (long t = rng.uniform(1, 6); t > 0; --t) pc.push_back(rng.gaussian(5, 3));
    for (long t = rng.uniform(1, 4); t > 0; --t) dc.push_back(rng.gaussian(5, 3));
    const Polynomial p(pc), d(dc);
    if (d.is_zero()) continue;
    const auto [quot, rem] = divide(p, d);
    EXPECT_EQ(quot * d + rem, p);
    EXPECT_LT(rem.degree(), d.degree());
  }
}

TEST(RationalFunction, NormalizesAndDifferentiates) {
  const Polynomial x = Polynomial::x();
  const RationalFunction f((x - 1) * (x + 2), Polynomial(2) * (x - 1));
  EXPECT_EQ(f.denominator(), Polynomial(1));
  EXPECT_EQ(f.numerator(), poly({1, GaussianRational(1, 2)}));
  const RationalFunction g(Polynomial(1), x);
  EXPECT_EQ(g.derivative(), RationalFunction(Polynomial(-1), x * x));
  EXPECT_EQ(RationalFunction::z_power(3).theta_derivative(), RationalFunction(Polynomial::monomial(3, 3)));
  EXPECT_EQ(g * RationalFunction(x), RationalFunction(1));
}

TEST(Subspace, Operations) {
  const Subspace a = Subspace::span(3, {e(3, 0), e(3, 1)});
  const Subspace b = Subspace::span(3, {e(3, 1), e(3, 2)});
  EXPECT_TRUE(intersect(a, b).same_span(Subspace::span(3, {e(3, 1)})));
  EXPECT_TRUE(intersect(a, b).same_span(intersect(b, a)));
  EXPECT_TRUE(intersect(a, a).same_span(a));
  EXPECT_TRUE(image(ExactMatrix::identity(3), a).same_span(a));
  EXPECT_TRUE(is_invariant(ExactMatrix::diagonal({1, 2}), Subspace::span(2, {e(2, 0)})));
  EXPECT_FALSE(is_invariant(ExactMatrix{{1, 0}, {1, 1}}, Subspace::span(2, {e(2, 0)})));
  EXPECT_THROW(intersect(a, Subspace(2)), std::invalid_argument);
}

TEST(Subspace, IntersectionIsCommutativeOnRandomSpans) {
  Rng rng(29);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 4;
    std::vector<ExactVector> va, vb;
    for (int t = 0; t < 2; ++t) va.push_back(rng.matrix(n, 1, 3, 2).column(0));
    for (int t = 0; t < 3; ++t) vb.push_back(rng.matrix(n, 1, 3, 2).column(0));
    const Subspace a = Subspace::span(n, va), b = Subspace::span(n, vb);
    const Subspace ab = intersect(a, b);
    EXPECT_TRUE(ab.same_span(intersect(b, a)));
    EXPECT_TRUE(a.contains(ab));
    EXPECT_TRUE(b.contains(ab));
    EXPECT_EQ(ab.dim(), a.dim() + b.dim() - Subspace::span(n, [&] {
                auto all = va;
                all.insert(all.end(), vb.begin(), vb.end());
                return all;
              }()).dim());
  }
}
