#include "levelt/random.hpp"

namespace levelt {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

double Rng::unit_interval() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

GaussianRational Rng::rational(long max_num, long max_den) {
  return GaussianRational(uniform(-max_num, max_num), uniform(1, max_den));
}

GaussianRational Rng::gaussian(long max_num, long max_den) {
  GaussianRational re = rational(max_num, max_den);
  if (uniform(0, 1) == 0) return re;
  return re + rational(max_num, max_den) * GaussianRational::i();
}

GaussianRational Rng::nonzero_gaussian(long max_num, long max_den) {
  for (;;) {
    GaussianRational x = gaussian(max_num, max_den);
    if (!x.is_zero()) return x;
  }
}

ExactMatrix Rng::matrix(std::size_t rows, std::size_t cols, long max_num, long max_den) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(max_num, max_den);
  return m;
}

ExactMatrix Rng::invertible(std::size_t n, long max_num) {
  ExactMatrix lower = ExactMatrix::identity(n);
  ExactMatrix upper = ExactMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      lower(r, c) = uniform(-max_num, max_num);
      upper(c, r) = uniform(-max_num, max_num);
    }
  }
  return lower * upper;
}

}  // namespace levelt
