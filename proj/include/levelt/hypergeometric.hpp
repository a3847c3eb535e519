#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "levelt/gaussian_rational.hpp"
#include "levelt/theta_operator.hpp"

namespace levelt {

/// Parameters (alpha_1..alpha_n; beta_1..beta_n) of
///   D(alpha; beta) = (t + beta_1 - 1)...(t + beta_n - 1) - z (t + alpha_1)...(t + alpha_n).
struct HGParams {
  std::vector<GaussianRational> alpha;
  std::vector<GaussianRational> beta;

  std::size_t order() const { return alpha.size(); }
  /// Throws std::invalid_argument unless the lists have equal length n >= 2.
  void validate() const;
};

/// 0-based index pair (i, j) referring to alpha_i and beta_j.
struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct LocalExponents {
  std::vector<GaussianRational> at_zero;      // 1 - beta_j
  std::vector<GaussianRational> at_one;       // 0, 1, .., n-2, -1 + sum(beta_j - alpha_j)
  std::vector<GaussianRational> at_infinity;  // alpha_j
};

struct ReducibilityVerdict {
  bool reducible = false;
  std::optional<IndexPair> witness;  // first pair in lexicographic order
};

/// Index pairs with alpha_i - beta_j = 0, in Z_{>0}, in Z_{<0}; lexicographic order.
struct ReducibilityPartition {
  std::vector<IndexPair> zero;
  std::vector<IndexPair> positive;
  std::vector<IndexPair> negative;
};

enum class ContiguityKind { prop1_left, prop1_right, cor2_alpha, cor2_beta, prop3_shift };

/// delta for the two prop1 forms, a 0-based index j for cor2_*, an integer shift s for prop3.
using ContiguityArgument = std::variant<GaussianRational, long>;

struct Factorization {
  std::vector<IndexPair> matching;              // greedy (i_k, j_k)
  std::vector<GaussianRational> linear_factors; // alpha'_k, factor (t + alpha'_k - 1)
  HGParams reduced;                             // may have order < 2
  /// R with D(p) * R == R * prod(t + alpha'_k - 1) * D(reduced).
  ThetaOperator multiplier;
  bool identity_holds = false;
  /// right_gcd(R, prod(...) * D(reduced)) == 1: R realizes the equivalence.
  bool multiplier_coprime = false;
};

/// True when the difference is an integer (zero imaginary part, integral real part).
bool is_integer_difference(const GaussianRational& a, const GaussianRational& b);

/// D(alpha; beta) for equal-length lists of any length (n = 0 gives 1 - z).
ThetaOperator expand_hypergeometric(std::span<const GaussianRational> alpha, std::span<const GaussianRational> beta);

/// The hypergeometric operator of order n >= 2 in normal form.
ThetaOperator build_D(const HGParams& p);

LocalExponents exponents(const HGParams& p);
ReducibilityVerdict is_reducible(const HGParams& p);
ReducibilityPartition partition(const HGParams& p);

/// Expands both sides of the chosen identity and compares normal forms.
bool contiguity_check(ContiguityKind kind, const HGParams& p, const ContiguityArgument& extra);

/// Shifts every parameter by an integer so its real part lies in [0, 1).
/// Throws PreconditionError naming the first pair with beta_j - alpha_i integral.
HGParams canonical_shift_class(const HGParams& p);

/// Greedy matching of pairs with alpha_i - beta_j in Z_{>=0} (smallest
/// difference first, ties by index order) and the resulting split into
/// linear left factors and a reduced operator. Throws PreconditionError
/// ("no admissible matching") when no such pair exists.
Factorization factor_reducible(const HGParams& p);

std::string to_string(ContiguityKind kind);
ContiguityKind contiguity_kind_from_string(std::string_view name);

}  // namespace levelt
