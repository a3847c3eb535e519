#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace levelt {

/// Exact complex scalar a + b*i with a, b arbitrary-precision rationals.
///
/// Both parts are kept canonical (lowest terms, positive denominators), so
/// equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT: literals
  GaussianRational(long num, long den);
  explicit GaussianRational(mpq_class re, mpq_class im = 0);

  /// Accepts "3", "-3/2", "1/2+1/3*i", "2-i", "i", "-5/7*i" (whitespace ignored).
  static GaussianRational parse(std::string_view text);
  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  /// Real with integral value.
  bool is_integer() const { return is_real() && re_.get_den() == 1; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  /// |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  /// Canonical rendering: "3/2", "-1/3*i", "1/2+1/3*i".
  std::string str() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return GaussianRational(-a.re_, -a.im_); }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

/// x^k for k >= 0.
GaussianRational pow(const GaussianRational& x, unsigned k);

/// Total order (real part, then imaginary part); only used for deterministic sorting.
bool lex_less(const GaussianRational& a, const GaussianRational& b);

}  // namespace levelt
