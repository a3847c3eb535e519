#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "levelt/gaussian_rational.hpp"
#include "levelt/matrix.hpp"

namespace levelt {

/// mt19937_64 with modulo reduction, so a seed gives the same stream on
/// every platform (std distributions are implementation defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi);
  double unit_interval();
  /// num/den with |num| <= max_num and 1 <= den <= max_den.
  GaussianRational rational(long max_num, long max_den);
  /// Both parts drawn by rational(); imaginary part is zero with probability 1/2.
  GaussianRational gaussian(long max_num, long max_den);
  GaussianRational nonzero_gaussian(long max_num, long max_den);
  ExactMatrix matrix(std::size_t rows, std::size_t cols, long max_num, long max_den);
  /// Unit lower times unit upper triangular with small entries: always invertible.
  ExactMatrix invertible(std::size_t n, long max_num);

 private:
  std::mt19937_64 engine_;
};

}  // namespace levelt
