#include "levelt/dmodule_ext.hpp"

#include <stdexcept>

#include "levelt/error.hpp"

namespace levelt {

ExactMatrix companion_of_operator(std::span<const GaussianRational> coefficients) {
  if (coefficients.size() < 2) throw std::invalid_argument("operator must have positive order");
  if (!coefficients.back().is_one()) throw std::invalid_argument("operator must be monic");
  const std::size_t r = coefficients.size() - 1;
  ExactMatrix m(r, r);
  for (std::size_t k = 1; k < r; ++k) m(k, k - 1) = 1;
  for (std::size_t k = 0; k < r; ++k) m(k, r - 1) = -coefficients[k];
  return m;
}

ExtensionBlock extension_block(std::span<const GaussianRational> l, std::span<const GaussianRational> lp) {
  ExtensionBlock b{companion_of_operator(l), companion_of_operator(lp), {}, {}};
  const std::size_t r = b.a_L.rows();
  const std::size_t rp = b.a_Lp.rows();
  b.a_M = ExactMatrix(rp + r, rp + r);
  for (std::size_t i = 0; i < rp; ++i)
    for (std::size_t j = 0; j < rp; ++j) b.a_M(i, j) = b.a_Lp(i, j);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) b.a_M(rp + i, rp + j) = b.a_L(i, j);
  b.a_M(0, rp + r - 1) = 1;
  b.section = ExactMatrix(rp + r, r);
  for (std::size_t i = 0; i < r; ++i) b.section(rp + i, i) = 1;
  return b;
}

ExactVector psi_map(const ExtensionBlock& block, const ExactVector& u) {
  const std::size_t r = block.a_L.rows();
  const std::size_t rp = block.a_Lp.rows();
  if (u.size() != r) throw std::invalid_argument("psi_map: vector length must equal the order of L");
  ExactVector full = block.a_M * (block.section * u);
  const ExactVector moved = block.section * (block.a_L * u);
  for (std::size_t k = 0; k < full.size(); ++k) full[k] -= moved[k];
  for (std::size_t k = rp; k < full.size(); ++k) {
    if (!full[k].is_zero()) throw VerificationError("psi_map: component along V(L) does not vanish");
  }
  return ExactVector(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(rp));
}

long ext_dimension(long n, long card_s, long irr, long h0) {
  if (n < 1 || card_s < 1 || irr < 0 || h0 < 0) throw std::invalid_argument("ext_dimension: arguments out of range");
  return (card_s - 2) * n + irr + h0;
}

ParameterCounts parameter_counts(long n, long s) {
  if (n < 1 || s < 1) throw std::invalid_argument("parameter_counts: n and s must be positive");
  const long twice = n * (n * (s - 2) + s);
  if (twice % 2 != 0) throw VerificationError("parameter_counts: odd equation parameter count");
  ParameterCounts c;
  c.equation_count = twice / 2;
  c.monodromy_count = n * n * (s - 2) + 1;
  c.rigid = c.equation_count == c.monodromy_count;
  return c;
}

}  // namespace levelt
