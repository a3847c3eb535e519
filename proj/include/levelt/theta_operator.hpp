#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "levelt/gaussian_rational.hpp"
#include "levelt/polynomial.hpp"

namespace levelt {

/// theta-degree reported for the zero operator.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Element of Q(i)[z, 1/z][theta], theta = z d/dz, in the normal form
/// sum c_{jk} z^j theta^k (z-powers to the left). Multiplication follows the
/// rewrite rule theta z = z theta + z. Negative z-powers are allowed so that
/// shifts by z^s work for every integer s.
class ThetaOperator {
 public:
  /// (z-exponent, theta-exponent)
  using Key = std::pair<long, unsigned>;

  ThetaOperator() = default;
  ThetaOperator(const GaussianRational& c);  // NOLINT: scalars embed implicitly
  ThetaOperator(long c) : ThetaOperator(GaussianRational(c)) {}  // NOLINT

  static ThetaOperator term(const GaussianRational& c, long z_power, unsigned theta_power);
  static ThetaOperator theta() { return term(1, 0, 1); }
  static ThetaOperator z(long power = 1) { return term(1, power, 0); }
  /// p(theta) for a polynomial p.
  static ThetaOperator in_theta(const Polynomial& p);
  /// theta + c
  static ThetaOperator theta_plus(const GaussianRational& c);

  /// Grammar: sums/products/powers of z, t (theta), i, integers and p/q
  /// literals, with parentheses. "z^-k" is accepted for pure z-powers.
  static ThetaOperator parse(std::string_view text);

  const std::map<Key, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(long z_power, unsigned theta_power) const;

  /// kMinusInfinity for zero.
  int theta_degree() const;
  /// Largest / smallest z exponent present (0 for the zero operator).
  long z_degree() const;
  long z_valuation() const;

  /// Normal-form rendering, e.g. "t^3-2*t^2-z*t^3+2*z*t^2"; parse(str()) == *this.
  std::string str() const;

  ThetaOperator& operator+=(const ThetaOperator& o);
  ThetaOperator& operator-=(const ThetaOperator& o);
  friend ThetaOperator operator+(ThetaOperator a, const ThetaOperator& b) { return a += b; }
  friend ThetaOperator operator-(ThetaOperator a, const ThetaOperator& b) { return a -= b; }
  friend ThetaOperator operator-(const ThetaOperator& a);
  friend ThetaOperator operator*(const ThetaOperator& a, const ThetaOperator& b);
  friend bool operator==(const ThetaOperator& a, const ThetaOperator& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Key& key, const GaussianRational& c);
  std::map<Key, GaussianRational> terms_;
};

/// Associative product in normal form.
ThetaOperator op_mul(const ThetaOperator& p, const ThetaOperator& q);
ThetaOperator op_pow(const ThetaOperator& p, unsigned k);

/// Operator sum r_k(z) theta^k with rational-function coefficients on the
/// left; used for Euclidean division in Q(i)(z)[theta].
class RationalThetaOperator {
 public:
  RationalThetaOperator() = default;
  RationalThetaOperator(const ThetaOperator& p);  // NOLINT: lifting is lossless
  explicit RationalThetaOperator(std::vector<RationalFunction> coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  int theta_degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RationalFunction>& coefficients() const { return coeffs_; }
  const RationalFunction& leading() const;
  /// Left-multiplied by 1/leading so the top theta coefficient is 1.
  RationalThetaOperator monic() const;

  /// Back to Laurent-polynomial normal form when every coefficient has a z^m denominator.
  std::optional<ThetaOperator> to_theta_operator() const;

  std::string str() const;

  friend RationalThetaOperator operator+(const RationalThetaOperator& a, const RationalThetaOperator& b);
  friend RationalThetaOperator operator-(const RationalThetaOperator& a, const RationalThetaOperator& b);
  friend RationalThetaOperator operator*(const RationalThetaOperator& a, const RationalThetaOperator& b);
  friend bool operator==(const RationalThetaOperator& a, const RationalThetaOperator& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<RationalFunction> coeffs_;
};

struct RightDivision {
  RationalThetaOperator quotient;
  RationalThetaOperator remainder;
};

/// p = quotient * d + remainder with theta-degree(remainder) < theta-degree(d).
RightDivision right_divide(const RationalThetaOperator& p, const RationalThetaOperator& d);

/// Monic greatest common right divisor (Euclid on right_divide).
RationalThetaOperator right_gcd(const RationalThetaOperator& p, const RationalThetaOperator& q);

/// q with p = f * q, if such a q exists with Laurent coefficients whose
/// z-valuation is at least min(0, z-valuation of p).
std::optional<ThetaOperator> left_factor_check(const ThetaOperator& p, const ThetaOperator& f);

}  // namespace levelt
