#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "levelt/hypergeometric.hpp"

namespace levelt {

using Complex = std::complex<double>;
using FloatMatrix = Eigen::MatrixXcd;

struct LocalSpectra {
  std::vector<Complex> at_zero;      // exp(2 pi i (1 - beta_j))
  std::vector<Complex> at_one;       // 1 (n-1 times), exp(2 pi i sum(beta - alpha))
  std::vector<Complex> at_infinity;  // exp(2 pi i alpha_j)
};

/// exp(2 pi i x) for rational x, reduced modulo 1 exactly before rounding.
Complex unit_root(const GaussianRational& x);

/// Throws PreconditionError for parameters with nonzero imaginary part.
LocalSpectra local_spectra(const HGParams& p);

/// Ascending coefficients of prod (X - r), monic.
std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots);
/// Ones on the subdiagonal, last column -c_0, .., -c_{n-1}.
FloatMatrix companion_from_coefficients(const std::vector<Complex>& monic);
/// det(X I - m) by the Faddeev-LeVerrier recursion, ascending and monic.
std::vector<Complex> numeric_char_poly(const FloatMatrix& m);

/// Local monodromies with m_inf * m1 * m0 = I: m_inf = A, m0 = B^-1, m1 = A^-1 B,
/// A and B the companions of prod (X - exp(2 pi i alpha_j)), prod (X - exp(2 pi i beta_j)).
struct MonodromyTriple {
  FloatMatrix m0;
  FloatMatrix m1;
  FloatMatrix minf;
  double tolerance = 0;
  double residual = 0;  // max |m_inf m1 m0 - I|
};

double max_abs(const FloatMatrix& m);

/// Throws PreconditionError("reducible parameters") when the exponential
/// spectra at 0 and infinity meet within tol.
MonodromyTriple build_monodromy(const HGParams& p, double tol);

/// m - I has exactly one singular value above tol.
bool check_pseudo_reflection_numeric(const FloatMatrix& m, double tol);

/// Conjugates the triple by a random well-conditioned matrix, rebuilds the
/// cyclic basis from the shared columns of m_inf and m0^-1 and compares the
/// result with the companion forms. Throws VerificationError when the cyclic
/// chain is numerically degenerate.
bool rigidity_check_numeric(const MonodromyTriple& t, double tol, std::uint64_t seed);

}  // namespace levelt
