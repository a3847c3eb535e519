#include "levelt/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace levelt {

namespace {

void require_square(const ExactMatrix& m, const char* what) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty");
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const ExactVector& d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<ExactVector>& columns, std::size_t rows) {
  ExactMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector>& rows) {
  if (rows.empty()) return {};
  ExactMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("from_rows: length mismatch");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  return ExactVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactVector ExactMatrix::column(std::size_t c) const {
  ExactVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  ExactMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  ExactMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  ExactMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& a) {
  ExactMatrix r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

ExactVector operator*(const ExactMatrix& a, const ExactVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  ExactVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    }
  }
  return r;
}

ExactMatrix transpose(const ExactMatrix& m) {
  ExactMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

ExactMatrix power(const ExactMatrix& m, unsigned k) {
  require_square(m, "power");
  ExactMatrix result = ExactMatrix::identity(m.rows());
  for (unsigned j = 0; j < k; ++j) result = result * m;
  return result;
}

std::vector<std::size_t> reduce_row_echelon(ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const GaussianRational inv = GaussianRational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const GaussianRational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const ExactMatrix& m) {
  ExactMatrix w = m;
  return reduce_row_echelon(w).size();
}

GaussianRational determinant(const ExactMatrix& m) {
  require_square(m, "determinant");
  ExactMatrix w = m;
  const std::size_t n = w.rows();
  GaussianRational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && w(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return GaussianRational();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(w(pivot, c), w(col, c));
      det = -det;
    }
    det *= w(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (w(r, col).is_zero()) continue;
      const GaussianRational f = w(r, col) / w(col, col);
      for (std::size_t c = col; c < n; ++c) w(r, c) -= f * w(col, c);
    }
  }
  return det;
}

bool is_invertible(const ExactMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b) {
  require_square(a, "solve");
  if (b.rows() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = a.rows();
  ExactMatrix aug(n, n + b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  const auto pivots = reduce_row_echelon(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  ExactMatrix x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = aug(r, n + c);
  }
  return x;
}

ExactMatrix inverse(const ExactMatrix& m) { return solve(m, ExactMatrix::identity(m.rows())); }

Polynomial char_poly(const ExactMatrix& m) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  require_square(m, "char_poly");
  const std::size_t n = m.rows();
  std::vector<GaussianRational> c(n + 1);
  c[n] = 1;
  ExactMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix next = m * mk;
    for (std::size_t d = 0; d < n; ++d) next(d, d) += c[n - k + 1];
    mk = std::move(next);
    ExactMatrix am = m * mk;
    GaussianRational trace;
    for (std::size_t d = 0; d < n; ++d) trace += am(d, d);
    c[n - k] = -trace / GaussianRational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

ExactMatrix conjugate(const ExactMatrix& m, const ExactMatrix& u) { return u * m * inverse(u); }

ExactVector scale(const GaussianRational& s, const ExactVector& v) {
  ExactVector r = v;
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const ExactVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<ExactVector>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("subspace: vector length does not match ambient dimension");
    if (!s.contains(v)) s.basis_.push_back(v);
  }
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<ExactVector> e;
  for (std::size_t k = 0; k < ambient; ++k) {
    ExactVector v(ambient);
    v[k] = 1;
    e.push_back(std::move(v));
  }
  return span(ambient, e);
}

ExactMatrix Subspace::as_matrix() const { return ExactMatrix::from_columns(basis_, ambient_); }

bool Subspace::contains(const ExactVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace: dimension mismatch");
  if (is_zero(v)) return true;
  if (basis_.empty()) return false;
  std::vector<ExactVector> all = basis_;
  all.push_back(v);
  return rank(ExactMatrix::from_columns(all, ambient_)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspace: dimension mismatch");
  if (other.basis_.empty()) return true;
  std::vector<ExactVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return rank(ExactMatrix::from_columns(all, ambient_)) == basis_.size();
}

Subspace kernel(const ExactMatrix& m) {
  ExactMatrix r = m;
  const auto pivots = reduce_row_echelon(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

Subspace column_space(const ExactMatrix& m) {
  std::vector<ExactVector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: dimension mismatch");
  const std::size_t n = a.ambient();
  if (a.is_trivial() || b.is_trivial()) return Subspace(n);
  // [A | -B] (x; y) = 0  =>  A x lies in both.
  ExactMatrix joint(n, a.dim() + b.dim());
  for (std::size_t c = 0; c < a.dim(); ++c) {
    for (std::size_t r = 0; r < n; ++r) joint(r, c) = a.basis()[c][r];
  }
  for (std::size_t c = 0; c < b.dim(); ++c) {
    for (std::size_t r = 0; r < n; ++r) joint(r, a.dim() + c) = -b.basis()[c][r];
  }
  std::vector<ExactVector> vectors;
  const Subspace relations = kernel(joint);
  for (const auto& coeffs : relations.basis()) {
    ExactVector v(n);
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (coeffs[c].is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) v[r] += coeffs[c] * a.basis()[c][r];
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace image(const ExactMatrix& m, const Subspace& s) {
  if (m.cols() != s.ambient()) throw std::invalid_argument("image: dimension mismatch");
  std::vector<ExactVector> vectors;
  for (const auto& v : s.basis()) vectors.push_back(m * v);
  return Subspace::span(m.rows(), vectors);
}

bool is_invariant(const ExactMatrix& m, const Subspace& s) {
  if (!m.is_square() || m.rows() != s.ambient()) throw std::invalid_argument("is_invariant: dimension mismatch");
  return s.contains(image(m, s));
}

std::vector<ExactVector> complete_basis(const Subspace& s) {
  Subspace acc = s;
  std::vector<ExactVector> vectors = s.basis();
  for (std::size_t k = 0; k < s.ambient() && vectors.size() < s.ambient(); ++k) {
    ExactVector e(s.ambient());
    e[k] = 1;
    if (!acc.contains(e)) {
      vectors.push_back(e);
      acc = Subspace::span(s.ambient(), vectors);
    }
  }
  return vectors;
}

}  // namespace levelt
