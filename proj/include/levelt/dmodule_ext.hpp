#pragma once

#include <span>

#include "levelt/matrix.hpp"

namespace levelt {

/// Companion matrix of d/dz^{r+1} + a_r d/dz^r + ... + a_0, given as the
/// ascending list a_0, .., a_r, 1. Ones on the subdiagonal, last column -a.
ExactMatrix companion_of_operator(std::span<const GaussianRational> coefficients);

/// Connection matrices of M = L' L as an extension of V(L) by V(L').
struct ExtensionBlock {
  ExactMatrix a_L;
  ExactMatrix a_Lp;
  ExactMatrix a_M;      // [[a_Lp, C], [0, a_L]], C has a single 1 in its top-right corner
  ExactMatrix section;  // [0; I] of size (r+r'+2) x (r+1)
};

ExtensionBlock extension_block(std::span<const GaussianRational> l, std::span<const GaussianRational> lp);

/// a_M S u - S a_L u, projected onto V(L'). Equals (u_last, 0, .., 0).
ExactVector psi_map(const ExtensionBlock& block, const ExactVector& u);

/// (card_s - 2) n + irr + h0.
long ext_dimension(long n, long card_s, long irr, long h0);

struct ParameterCounts {
  long equation_count = 0;   // n (n (s - 2) + s) / 2
  long monodromy_count = 0;  // n^2 (s - 2) + 1
  bool rigid = false;
};

ParameterCounts parameter_counts(long n, long s);

}  // namespace levelt
