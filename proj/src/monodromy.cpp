#include "levelt/monodromy.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "levelt/error.hpp"

namespace levelt {

namespace {

void require_real(const GaussianRational& x) {
  if (!x.is_real()) throw PreconditionError("numeric monodromy needs real parameters, got " + x.str());
}

double condition_number(const FloatMatrix& m) {
  Eigen::JacobiSVD<FloatMatrix> svd(m);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) == 0 ? INFINITY : s(0) / s(s.size() - 1);
}

FloatMatrix random_conjugator(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (;;) {
    FloatMatrix q(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) q(r, c) = Complex(unit(rng), unit(rng));
    if (condition_number(q) < 50) return q;
  }
}

}  // namespace

Complex unit_root(const GaussianRational& x) {
  require_real(x);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.re().get_num_mpz_t(), x.re().get_den_mpz_t());
  const mpq_class frac = x.re() - q;
  const double angle = 2 * std::numbers::pi * frac.get_d();
  // Exact values at quarter turns keep the usual fixtures exact.
  if (frac == 0) return {1, 0};
  if (frac == mpq_class(1, 4)) return {0, 1};
  if (frac == mpq_class(1, 2)) return {-1, 0};
  if (frac == mpq_class(3, 4)) return {0, -1};
  return {std::cos(angle), std::sin(angle)};
}

LocalSpectra local_spectra(const HGParams& p) {
  p.validate();
  LocalSpectra s;
  GaussianRational excess;
  for (std::size_t j = 0; j < p.order(); ++j) {
    require_real(p.alpha[j]);
    require_real(p.beta[j]);
    s.at_zero.push_back(unit_root(GaussianRational(1) - p.beta[j]));
    s.at_infinity.push_back(unit_root(p.alpha[j]));
    excess += p.beta[j] - p.alpha[j];
  }
  s.at_one.assign(p.order() - 1, Complex(1, 0));
  s.at_one.push_back(unit_root(excess));
  return s;
}

std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex(1, 0)};
  for (const auto& r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0, 0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

FloatMatrix companion_from_coefficients(const std::vector<Complex>& monic) {
  const std::size_t n = monic.size() - 1;
  FloatMatrix m = FloatMatrix::Zero(n, n);
  for (std::size_t k = 1; k < n; ++k) m(k, k - 1) = 1;
  for (std::size_t k = 0; k < n; ++k) m(k, n - 1) = -monic[k];
  return m;
}

std::vector<Complex> numeric_char_poly(const FloatMatrix& m) {
  const auto n = m.rows();
  std::vector<Complex> c(n + 1);
  c[n] = 1;
  FloatMatrix mk = FloatMatrix::Zero(n, n);
  const FloatMatrix id = FloatMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    c[n - k] = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

double max_abs(const FloatMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

MonodromyTriple build_monodromy(const HGParams& p, double tol) {
  const LocalSpectra s = local_spectra(p);
  std::vector<Complex> beta_roots;
  for (const auto& b : p.beta) beta_roots.push_back(unit_root(b));
  for (const auto& a : s.at_infinity) {
    for (const auto& b : beta_roots) {
      if (std::abs(a - b) <= tol) throw PreconditionError("reducible parameters");
    }
  }
  const FloatMatrix a = companion_from_coefficients(poly_from_roots(s.at_infinity));
  const FloatMatrix b = companion_from_coefficients(poly_from_roots(beta_roots));
  MonodromyTriple t;
  t.minf = a;
  t.m0 = b.inverse();
  t.m1 = a.inverse() * b;
  t.tolerance = tol;
  const auto n = a.rows();
  t.residual = max_abs(t.minf * t.m1 * t.m0 - FloatMatrix::Identity(n, n));
  return t;
}

bool check_pseudo_reflection_numeric(const FloatMatrix& m, double tol) {
  const auto n = m.rows();
  Eigen::JacobiSVD<FloatMatrix> svd(m - FloatMatrix::Identity(n, n));
  return (svd.singularValues().array() > tol).count() == 1;
}

bool rigidity_check_numeric(const MonodromyTriple& t, double tol, std::uint64_t seed) {
  const auto n = t.minf.rows();
  const FloatMatrix a0 = t.minf;
  const FloatMatrix b0 = t.m0.inverse();
  const FloatMatrix q = random_conjugator(static_cast<std::size_t>(n), seed);
  const FloatMatrix q_inv = q.inverse();
  const FloatMatrix a = q * a0 * q_inv;
  const FloatMatrix b = q * b0 * q_inv;

  // W = ker(A - B) = {x : h x = 0}; A^k W = {x : h A^-k x = 0}.
  Eigen::JacobiSVD<FloatMatrix> diff(a - b, Eigen::ComputeFullV);
  const Eigen::RowVectorXcd h = diff.matrixV().col(0).adjoint();
  const FloatMatrix a_inv = a.inverse();
  FloatMatrix constraints(n - 1, n);
  Eigen::RowVectorXcd row = h;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    constraints.row(k) = row;
    row = row * a_inv;
  }
  Eigen::JacobiSVD<FloatMatrix> chain(constraints, Eigen::ComputeFullV);
  const auto& sv = chain.singularValues();
  std::ostringstream diag;
  if (sv.size() > 0 && sv(sv.size() - 1) < 1e3 * tol) {
    diag << "rigidity_check_numeric: cyclic chain is degenerate (smallest constraint singular value " << sv(sv.size() - 1)
         << ")";
    throw VerificationError(diag.str());
  }
  Eigen::VectorXcd v = chain.matrixV().col(n - 1);
  for (Eigen::Index k = 0; k + 2 < n; ++k) v = a_inv * v;
  FloatMatrix p(n, n);
  p.col(0) = v;
  for (Eigen::Index k = 1; k < n; ++k) p.col(k) = a * p.col(k - 1);
  const double cond = condition_number(p);
  if (!std::isfinite(cond) || cond > 1e10) {
    diag << "rigidity_check_numeric: cyclic basis is ill-conditioned (condition number " << cond << ")";
    throw VerificationError(diag.str());
  }
  const FloatMatrix p_inv = p.inverse();
  return max_abs(p_inv * a * p - a0) <= tol && max_abs(p_inv * b * p - b0) <= tol;
}

}  // namespace levelt
