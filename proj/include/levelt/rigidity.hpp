#pragma once

#include <optional>
#include <vector>

#include "levelt/matrix.hpp"
#include "levelt/polynomial.hpp"

namespace levelt {

struct MatrixTuple {
  std::vector<ExactMatrix> matrices;

  std::size_t size() const { return matrices.size(); }
  std::size_t dim() const { return matrices.empty() ? 0 : matrices.front().rows(); }
  const ExactMatrix& operator[](std::size_t i) const { return matrices[i]; }
  /// At least two square matrices of one common dimension n >= 2.
  void validate() const;
};

using Spectrum = std::vector<GaussianRational>;

enum class FrameSide { rows, columns };

/// Basis change U such that every U * A_i * U^-1 has the same rows (or
/// columns) at shared_indices.
struct CommonFrame {
  ExactMatrix basis_change;
  FrameSide side = FrameSide::columns;
  std::vector<std::size_t> shared_indices;
};

/// rank(h - I) == 1.
bool is_pseudo_reflection(const ExactMatrix& h);

/// True when all members agree on the rows (or columns) listed in the frame
/// after conjugation by its basis change.
bool frame_holds(const MatrixTuple& t, const CommonFrame& frame);

/// Throws PreconditionError naming the first failing member or pair, and
/// VerificationError when no frame can be certified.
CommonFrame common_frame(const MatrixTuple& t);

struct StabilizedSubspace {
  enum class Kind { line, hyperplane };
  Kind kind = Kind::line;
  Subspace subspace{0};
};

/// A common invariant line or hyperplane, given a shared eigenvalue lambda.
StabilizedSubspace find_stabilized_subspace(const MatrixTuple& t, const CommonFrame& frame,
                                            const GaussianRational& lambda);

struct SpectrumCertificate {
  /// Characteristic polynomial of the common block: the restriction to w when
  /// w lies in the span of the shared basis vectors, the quotient action otherwise.
  Polynomial factor;
  bool inside_shared_span = false;
  /// Monic gcd of all characteristic polynomials; a multiple of factor.
  Polynomial gcd;
};

SpectrumCertificate common_spectrum_certificate(const MatrixTuple& t, const CommonFrame& frame, const Subspace& w);

/// Ones on the subdiagonal, last column -c_0, .., -c_{n-1} for monic p.
ExactMatrix companion_from_poly(const Polynomial& p);
ExactMatrix companion_from_spectrum(const Spectrum& s);

MatrixTuple levelt_tuple(const std::vector<Spectrum>& spectra);

struct NormalForm {
  ExactMatrix basis_change;  // U with U * A_i * U^-1 == canon[i]
  MatrixTuple canon;
};

NormalForm levelt_normal_form(const MatrixTuple& t, const CommonFrame& frame);

/// u with u * a_i * u^-1 == b_i for all i, or nothing when some pair of
/// characteristic polynomials differ.
std::optional<ExactMatrix> tuple_conjugator(const MatrixTuple& a, const MatrixTuple& b);

/// For invertible a, b with a * b^-1 a pseudo-reflection: disjoint spectra.
bool is_irreducible_pair(const ExactMatrix& a, const ExactMatrix& b);

/// Dimension of the unital algebra generated by the tuple.
std::size_t algebra_span_dimension(const MatrixTuple& t);

/// Monic gcd of the characteristic polynomials of all members.
Polynomial char_poly_gcd(const MatrixTuple& t);

}  // namespace levelt
