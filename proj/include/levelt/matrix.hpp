#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "levelt/gaussian_rational.hpp"
#include "levelt/polynomial.hpp"

namespace levelt {

using ExactVector = std::vector<GaussianRational>;

/// Dense row-major matrix over the Gaussian rationals. Most operations of
/// the library want square matrices and check for it; rectangular shapes
/// are allowed for sections, bases and intermediate eliminations.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const ExactVector& d);
  static ExactMatrix from_columns(const std::vector<ExactVector>& columns, std::size_t rows);
  static ExactMatrix from_rows(const std::vector<ExactVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactVector row(std::size_t r) const;
  ExactVector column(std::size_t c) const;
  bool is_zero() const;

  std::string str() const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& a);
  friend ExactVector operator*(const ExactMatrix& a, const ExactVector& v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

ExactMatrix transpose(const ExactMatrix& m);
ExactMatrix power(const ExactMatrix& m, unsigned k);

/// Reduced row echelon form with first-nonzero pivoting; returns the pivot columns.
std::vector<std::size_t> reduce_row_echelon(ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);
GaussianRational determinant(const ExactMatrix& m);
bool is_invertible(const ExactMatrix& m);
/// Throws std::domain_error when singular.
ExactMatrix inverse(const ExactMatrix& m);
/// Solves a * x = b for square invertible a (b may have several columns).
ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b);

/// det(X*I - m), monic of degree n.
Polynomial char_poly(const ExactMatrix& m);

/// u * m * u^-1.
ExactMatrix conjugate(const ExactMatrix& m, const ExactMatrix& u);

ExactVector scale(const GaussianRational& s, const ExactVector& v);
bool is_zero(const ExactVector& v);

/// Linear subspace of Q(i)^n held by an independent spanning list.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  /// Keeps an independent subset of the given vectors (first come, first kept).
  static Subspace span(std::size_t ambient, const std::vector<ExactVector>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_trivial() const { return basis_.empty(); }
  const std::vector<ExactVector>& basis() const { return basis_; }
  /// ambient x dim matrix whose columns are the basis.
  ExactMatrix as_matrix() const;

  bool contains(const ExactVector& v) const;
  bool contains(const Subspace& other) const;
  bool same_span(const Subspace& other) const { return contains(other) && other.contains(*this); }

 private:
  std::size_t ambient_;
  std::vector<ExactVector> basis_;
};

Subspace kernel(const ExactMatrix& m);
Subspace column_space(const ExactMatrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace image(const ExactMatrix& m, const Subspace& s);
bool is_invariant(const ExactMatrix& m, const Subspace& s);
/// Extends the basis of s to a basis of the whole space with standard vectors;
/// the returned list starts with s's basis.
std::vector<ExactVector> complete_basis(const Subspace& s);

}  // namespace levelt
