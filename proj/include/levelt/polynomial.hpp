#pragma once

#include <span>
#include <string>
#include <vector>

#include "levelt/gaussian_rational.hpp"

namespace levelt {

/// Dense univariate polynomial over the Gaussian rationals, ascending
/// coefficients, never stored with a trailing zero. The zero polynomial has
/// no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(GaussianRational constant);  // NOLINT: scalars embed implicitly
  Polynomial(long constant) : Polynomial(GaussianRational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<GaussianRational> coefficients);

  static Polynomial x() { return monomial(1, 1); }
  static Polynomial monomial(const GaussianRational& c, std::size_t degree);
  /// prod (X - r) over the given roots.
  static Polynomial from_roots(std::span<const GaussianRational> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  GaussianRational coefficient(std::size_t k) const;
  const GaussianRational& leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  GaussianRational operator()(const GaussianRational& at) const;

  std::string str(std::string_view var = "X") const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
PolynomialDivision divide(const Polynomial& p, const Polynomial& d);
bool divides(const Polynomial& d, const Polynomial& p);

/// Monic gcd over Q(i). Throws std::invalid_argument when both inputs are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// Element of Q(i)(z): numerator / denominator with a monic denominator and
/// coprime parts.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(GaussianRational c) : num_(std::move(c)) {}  // NOLINT
  RationalFunction(long c) : num_(c) {}                          // NOLINT
  RationalFunction(Polynomial num) : num_(std::move(num)) {}     // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  /// z^k for any integer k.
  static RationalFunction z_power(long k);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction derivative() const;
  /// z * d/dz applied to this function.
  RationalFunction theta_derivative() const;

  std::string str(std::string_view var = "z") const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_{1};
};

}  // namespace levelt
