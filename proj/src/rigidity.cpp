#include "levelt/rigidity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "levelt/error.hpp"

namespace levelt {

namespace {

std::string member_name(std::size_t i) { return "A_" + std::to_string(i + 1); }

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + member_name(i) + ", " + member_name(j) + ")";
}

MatrixTuple transformed(const MatrixTuple& t, const ExactMatrix& u) {
  MatrixTuple r;
  const ExactMatrix u_inv = inverse(u);
  for (const auto& m : t.matrices) r.matrices.push_back(u * m * u_inv);
  return r;
}

MatrixTuple transposed(const MatrixTuple& t) {
  MatrixTuple r;
  for (const auto& m : t.matrices) r.matrices.push_back(transpose(m));
  return r;
}

bool same_row(const MatrixTuple& t, std::size_t k) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i].row(k) != t[0].row(k)) return false;
  return true;
}

bool same_column(const MatrixTuple& t, std::size_t k) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i].column(k) != t[0].column(k)) return false;
  return true;
}

std::optional<CommonFrame> frame_in_place(const MatrixTuple& t) {
  const std::size_t n = t.dim();
  for (FrameSide side : {FrameSide::columns, FrameSide::rows}) {
    std::vector<std::size_t> shared;
    for (std::size_t k = 0; k < n; ++k) {
      const bool same = side == FrameSide::columns ? same_column(t, k) : same_row(t, k);
      if (same) shared.push_back(k);
    }
    if (shared.size() >= n - 1) {
      shared.resize(n - 1);
      return CommonFrame{ExactMatrix::identity(n), side, shared};
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> leading_indices(std::size_t n) {
  std::vector<std::size_t> r(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) r[k] = k;
  return r;
}

std::size_t missing_index(const std::vector<std::size_t>& shared, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    bool found = false;
    for (auto s : shared) found = found || s == k;
    if (!found) return k;
  }
  throw std::invalid_argument("frame shares every index");
}

void check_frame(const MatrixTuple& t, const CommonFrame& frame) {
  t.validate();
  if (frame.basis_change.rows() != t.dim() || !is_invertible(frame.basis_change))
    throw PreconditionError("frame basis change must be an invertible matrix of the tuple's dimension");
  if (frame.shared_indices.size() != t.dim() - 1) throw PreconditionError("frame must list n-1 shared indices");
  if (!frame_holds(t, frame)) throw PreconditionError("tuple does not share the frame's rows or columns");
}

}  // namespace

void MatrixTuple::validate() const {
  if (matrices.size() < 2) throw std::invalid_argument("a matrix tuple needs at least two members");
  const std::size_t n = dim();
  if (n < 2) throw std::invalid_argument("matrix dimension must be at least 2");
  for (const auto& m : matrices) {
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("tuple members must be square of one dimension");
  }
}

bool is_pseudo_reflection(const ExactMatrix& h) {
  if (!h.is_square()) return false;
  return rank(h - ExactMatrix::identity(h.rows())) == 1;
}

bool frame_holds(const MatrixTuple& t, const CommonFrame& frame) {
  const MatrixTuple b = transformed(t, frame.basis_change);
  for (auto k : frame.shared_indices) {
    if (k >= t.dim()) return false;
    const bool same = frame.side == FrameSide::columns ? same_column(b, k) : same_row(b, k);
    if (!same) return false;
  }
  return true;
}

CommonFrame common_frame(const MatrixTuple& t) {
  t.validate();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!is_invertible(t[i])) throw PreconditionError("common_frame: " + member_name(i) + " is singular");
  }
  std::vector<ExactMatrix> differences;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (!is_pseudo_reflection(t[i] * inverse(t[j])))
        throw PreconditionError("common_frame: " + pair_name(i, j) + " quotient is not a pseudo-reflection");
      differences.push_back(t[i] - t[j]);
    }
  }
  if (auto f = frame_in_place(t)) return *f;

  // Either every difference kills one hyperplane W (shared columns on a
  // basis of W), or every difference has its image on one line span(w)
  // (shared rows once w is the last basis vector).
  const Subspace w_first = kernel(differences.front());
  bool same_kernel = true;
  for (const auto& d : differences) same_kernel = same_kernel && kernel(d).same_span(w_first);

  CommonFrame frame;
  if (same_kernel) {
    const ExactMatrix p = ExactMatrix::from_columns(complete_basis(w_first), n);
    frame = CommonFrame{inverse(p), FrameSide::columns, leading_indices(n)};
  } else {
    const Subspace line = column_space(differences.front());
    bool same_image = true;
    for (const auto& d : differences) same_image = same_image && column_space(d).same_span(line);
    if (!same_image) throw VerificationError("common_frame: differences share neither a kernel nor an image");
    std::vector<ExactVector> basis = complete_basis(line);
    std::rotate(basis.begin(), basis.begin() + 1, basis.end());
    const ExactMatrix p = ExactMatrix::from_columns(basis, n);
    frame = CommonFrame{inverse(p), FrameSide::rows, leading_indices(n)};
  }
  if (!frame_holds(t, frame)) throw VerificationError("common_frame: recovered basis does not share n-1 rows or columns");
  return frame;
}

StabilizedSubspace find_stabilized_subspace(const MatrixTuple& t, const CommonFrame& frame,
                                            const GaussianRational& lambda) {
  check_frame(t, frame);
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!char_poly(t[i])(lambda).is_zero())
      throw PreconditionError("find_stabilized_subspace: " + lambda.str() + " is not an eigenvalue of " + member_name(i));
  }
  const ExactMatrix& u = frame.basis_change;
  const MatrixTuple framed = transformed(t, u);
  // Work with matrices sharing rows; for a column frame these are the transposes.
  const bool rows_form = frame.side == FrameSide::rows;
  const MatrixTuple m = rows_form ? framed : transposed(framed);
  const ExactMatrix shifted = m[0] - lambda * ExactMatrix::identity(n);
  std::vector<ExactVector> rows;
  for (auto k : frame.shared_indices) rows.push_back(shifted.row(k));
  const ExactMatrix shared = ExactMatrix::from_rows(rows);

  ExactVector vec;
  bool eigenvector_of_m = false;
  if (rank(shared) == n - 1) {
    // Every shifted member kills the vector orthogonal to the shared rows.
    vec = kernel(shared).basis().front();
    eigenvector_of_m = true;
  } else {
    // A dependency among the shared rows is a common left eigenvector.
    const ExactVector c = kernel(transpose(shared)).basis().front();
    vec.assign(n, GaussianRational(0));
    for (std::size_t k = 0; k < c.size(); ++k) vec[frame.shared_indices[k]] = c[k];
  }
  // eigenvector_of_m: eigenvector of the framed matrices when rows_form,
  // of their transposes otherwise.
  const bool line = eigenvector_of_m == rows_form;
  StabilizedSubspace r;
  if (line) {
    r.kind = StabilizedSubspace::Kind::line;
    r.subspace = Subspace::span(n, {inverse(u) * vec});
  } else {
    r.kind = StabilizedSubspace::Kind::hyperplane;
    r.subspace = kernel(ExactMatrix::from_rows({vec}) * u);
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!is_invariant(t[i], r.subspace))
      throw VerificationError("find_stabilized_subspace: result is not invariant under " + member_name(i));
  }
  return r;
}

Polynomial char_poly_gcd(const MatrixTuple& t) {
  Polynomial g = char_poly(t[0]);
  for (std::size_t i = 1; i < t.size(); ++i) g = poly_gcd(g, char_poly(t[i]));
  return g;
}

SpectrumCertificate common_spectrum_certificate(const MatrixTuple& t, const CommonFrame& frame, const Subspace& w) {
  check_frame(t, frame);
  const std::size_t n = t.dim();
  if (w.ambient() != n || w.is_trivial() || w.dim() == n)
    throw PreconditionError("common_spectrum_certificate: subspace must be proper and nonzero");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!is_invariant(t[i], w))
      throw PreconditionError("common_spectrum_certificate: subspace is not invariant under " + member_name(i));
  }
  const ExactMatrix& u = frame.basis_change;
  MatrixTuple framed = transformed(t, u);
  Subspace w_framed = image(u, w);
  if (frame.side == FrameSide::rows) {
    // Transposes share columns and stabilize the annihilator of w.
    framed = transposed(framed);
    w_framed = kernel(transpose(w_framed.as_matrix()));
  }
  std::vector<ExactVector> e;
  for (auto k : frame.shared_indices) {
    ExactVector v(n, GaussianRational(0));
    v[k] = 1;
    e.push_back(v);
  }
  SpectrumCertificate cert;
  cert.inside_shared_span = Subspace::span(n, e).contains(w_framed);

  const std::size_t r = w_framed.dim();
  const ExactMatrix p = ExactMatrix::from_columns(complete_basis(w_framed), n);
  std::optional<Polynomial> factor;
  for (std::size_t i = 0; i < framed.size(); ++i) {
    const ExactMatrix block_form = inverse(p) * framed[i] * p;
    const std::size_t offset = cert.inside_shared_span ? 0 : r;
    const std::size_t size = cert.inside_shared_span ? r : n - r;
    ExactMatrix block(size, size);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) block(a, b) = block_form(offset + a, offset + b);
    const Polynomial f = char_poly(block);
    if (factor && *factor != f) throw VerificationError("common_spectrum_certificate: diagonal block is not common");
    factor = f;
  }
  cert.factor = *factor;
  cert.gcd = char_poly_gcd(t);
  if (cert.gcd.degree() < 1) throw VerificationError("common_spectrum_certificate: characteristic polynomials are coprime");
  if (!divides(cert.factor, cert.gcd)) throw VerificationError("common_spectrum_certificate: block factor does not divide the gcd");
  return cert;
}

ExactMatrix companion_from_poly(const Polynomial& p) {
  if (p.degree() < 1 || !p.is_monic()) throw PreconditionError("companion_from_poly: polynomial must be monic of positive degree");
  const auto n = static_cast<std::size_t>(p.degree());
  ExactMatrix m(n, n);
  for (std::size_t k = 1; k < n; ++k) m(k, k - 1) = 1;
  for (std::size_t k = 0; k < n; ++k) m(k, n - 1) = -p.coefficient(k);
  return m;
}

ExactMatrix companion_from_spectrum(const Spectrum& s) {
  if (s.empty()) throw PreconditionError("companion_from_spectrum: empty spectrum");
  for (const auto& x : s) {
    if (x.is_zero()) throw PreconditionError("companion_from_spectrum: spectrum contains 0");
  }
  return companion_from_poly(Polynomial::from_roots(s));
}

MatrixTuple levelt_tuple(const std::vector<Spectrum>& spectra) {
  if (spectra.size() < 2) throw PreconditionError("levelt_tuple: need at least two spectra");
  const std::size_t n = spectra.front().size();
  if (n < 2) throw PreconditionError("levelt_tuple: spectra must have at least two values");
  MatrixTuple t;
  for (const auto& s : spectra) {
    if (s.size() != n) throw PreconditionError("levelt_tuple: spectra must have equal size");
    t.matrices.push_back(companion_from_spectrum(s));
  }
  if (char_poly_gcd(t).degree() > 0) throw PreconditionError("levelt_tuple: a value is common to all spectra");
  return t;
}

NormalForm levelt_normal_form(const MatrixTuple& t, const CommonFrame& frame) {
  check_frame(t, frame);
  if (frame.side != FrameSide::columns) throw PreconditionError("levelt_normal_form: frame must share columns");
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!is_invertible(t[i])) throw PreconditionError("levelt_normal_form: " + member_name(i) + " is singular");
  }
  if (char_poly_gcd(t).degree() > 0) throw PreconditionError("spectrum-intersection hypothesis violated");

  const MatrixTuple framed = transformed(t, frame.basis_change);
  const ExactMatrix& a = framed[0];
  std::vector<ExactVector> e;
  for (auto k : frame.shared_indices) {
    ExactVector v(n, GaussianRational(0));
    v[k] = 1;
    e.push_back(v);
  }
  const Subspace w = Subspace::span(n, e);
  Subspace chain = w;
  ExactMatrix a_power = ExactMatrix::identity(n);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    a_power = a_power * a;
    chain = intersect(chain, image(a_power, w));
  }
  if (chain.dim() != 1) throw PreconditionError("spectrum-intersection hypothesis violated");

  ExactVector s = chain.basis().front();
  GaussianRational lead;
  for (const auto& x : s) {
    if (!x.is_zero()) {
      lead = x;
      break;
    }
  }
  s = scale(GaussianRational(1) / lead, s);
  ExactVector v = inverse(power(a, static_cast<unsigned>(n - 2))) * s;
  std::vector<ExactVector> basis{v};
  for (std::size_t k = 1; k < n; ++k) basis.push_back(a * basis.back());
  const ExactMatrix p = ExactMatrix::from_columns(basis, n);
  if (!is_invertible(p)) throw PreconditionError("spectrum-intersection hypothesis violated");

  NormalForm nf;
  nf.basis_change = inverse(p) * frame.basis_change;
  nf.canon = transformed(t, nf.basis_change);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (nf.canon[i] != companion_from_poly(char_poly(t[i])))
      throw VerificationError("levelt_normal_form: " + member_name(i) + " is not in companion form");
  }
  return nf;
}

std::optional<ExactMatrix> tuple_conjugator(const MatrixTuple& a, const MatrixTuple& b) {
  a.validate();
  b.validate();
  if (a.size() != b.size() || a.dim() != b.dim()) throw PreconditionError("tuple_conjugator: tuples differ in shape");
  const NormalForm na = levelt_normal_form(a, common_frame(a));
  const NormalForm nb = levelt_normal_form(b, common_frame(b));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (na.canon[i] != nb.canon[i]) return std::nullopt;
  }
  ExactMatrix u = inverse(nb.basis_change) * na.basis_change;
  const ExactMatrix u_inv = inverse(u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (u * a[i] * u_inv != b[i]) throw VerificationError("tuple_conjugator: composed normal forms do not conjugate");
  }
  return u;
}

bool is_irreducible_pair(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || b.rows() != b.cols())
    throw PreconditionError("is_irreducible_pair: matrices must be square of one size");
  if (!is_invertible(a) || !is_invertible(b)) throw PreconditionError("is_irreducible_pair: matrices must be invertible");
  if (!is_pseudo_reflection(a * inverse(b))) throw PreconditionError("is_irreducible_pair: a * b^-1 is not a pseudo-reflection");
  return poly_gcd(char_poly(a), char_poly(b)).degree() == 0;
}

std::size_t algebra_span_dimension(const MatrixTuple& t) {
  if (t.size() == 0) throw std::invalid_argument("algebra_span_dimension: empty tuple");
  const std::size_t n = t.dim();
  auto flatten = [n](const ExactMatrix& m) {
    ExactVector v;
    v.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v.push_back(m(r, c));
    return v;
  };
  std::vector<ExactVector> flat{flatten(ExactMatrix::identity(n))};
  std::vector<ExactMatrix> frontier{ExactMatrix::identity(n)};
  Subspace span = Subspace::span(n * n, flat);
  while (!frontier.empty() && span.dim() < n * n) {
    std::vector<ExactMatrix> next;
    for (const auto& x : frontier) {
      for (const auto& g : t.matrices) {
        const ExactMatrix y = x * g;
        const ExactVector fy = flatten(y);
        if (span.contains(fy)) continue;
        flat.push_back(fy);
        span = Subspace::span(n * n, flat);
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return span.dim();
}

}  // namespace levelt
