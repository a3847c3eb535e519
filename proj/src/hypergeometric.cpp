#include "levelt/hypergeometric.hpp"

#include <map>
#include <stdexcept>

#include "levelt/error.hpp"
#include "levelt/matrix.hpp"

namespace levelt {

namespace {

ThetaOperator shifted_product(std::span<const GaussianRational> params, const GaussianRational& shift) {
  ThetaOperator r(1);
  for (const auto& x : params) r = r * ThetaOperator::theta_plus(x + shift);
  return r;
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "(i=" + std::to_string(i + 1) + ", j=" + std::to_string(j + 1) + ")";
}

GaussianRational floor_real(const GaussianRational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.re().get_num_mpz_t(), x.re().get_den_mpz_t());
  return GaussianRational(mpq_class(q));
}

struct ExponentLess {
  bool operator()(const std::pair<GaussianRational, long>& a, const std::pair<GaussianRational, long>& b) const {
    if (a.first != b.first) return lex_less(a.first, b.first);
    return a.second < b.second;
  }
};

// Whether op annihilates a nonzero element of the span of z^a log^m z,
// m < multiplicity of a, i.e. the solutions of prod (theta - a). A common
// solution exists exactly when the two operators have a nontrivial common
// right factor.
bool shares_euler_solution(const std::vector<GaussianRational>& roots, const ThetaOperator& op) {
  std::vector<std::pair<GaussianRational, long>> basis;
  for (const auto& a : roots) {
    long m = 0;
    for (const auto& [b, k] : basis) m += b == a;
    basis.emplace_back(a, m);
  }
  // theta-polynomial attached to each z-power of op
  std::map<long, std::vector<GaussianRational>> by_power;
  for (const auto& [key, c] : op.terms()) {
    auto& q = by_power[key.first];
    if (q.size() <= key.second) q.resize(key.second + 1, GaussianRational(0));
    q[key.second] = c;
  }
  std::map<std::pair<GaussianRational, long>, std::map<std::size_t, GaussianRational>, ExponentLess> images;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& [a, m] = basis[col];
    for (const auto& [j, q] : by_power) {
      // q(theta) z^a L^m = z^a q(a + d/dL) L^m; taylor[k] = q^(k)(a)/k!
      std::vector<GaussianRational> taylor = q;
      for (std::size_t pass = 0; pass < taylor.size(); ++pass)
        for (std::size_t k = taylor.size() - 1; k > pass; --k) taylor[k - 1] += a * taylor[k];
      GaussianRational falling(1);
      for (long k = 0; k <= m && k < static_cast<long>(taylor.size()); ++k) {
        if (k > 0) falling *= GaussianRational(m - k + 1);
        if (!taylor[k].is_zero()) images[{a + GaussianRational(j), m - k}][col] += taylor[k] * falling;
      }
    }
  }
  ExactMatrix action(std::max<std::size_t>(images.size(), 1), basis.size());
  std::size_t row = 0;
  for (const auto& [monomial, entries] : images) {
    for (const auto& [col, c] : entries) action(row, col) = c;
    ++row;
  }
  return kernel(action).dim() > 0;
}

}  // namespace

void HGParams::validate() const {
  if (alpha.size() != beta.size()) throw std::invalid_argument("alpha and beta must have the same length");
  if (alpha.size() < 2) throw std::invalid_argument("hypergeometric order must be at least 2");
}

bool is_integer_difference(const GaussianRational& a, const GaussianRational& b) { return (a - b).is_integer(); }

ThetaOperator expand_hypergeometric(std::span<const GaussianRational> alpha, std::span<const GaussianRational> beta) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("alpha and beta must have the same length");
  return shifted_product(beta, -1) - ThetaOperator::z() * shifted_product(alpha, 0);
}

ThetaOperator build_D(const HGParams& p) {
  p.validate();
  return expand_hypergeometric(p.alpha, p.beta);
}

LocalExponents exponents(const HGParams& p) {
  p.validate();
  const std::size_t n = p.order();
  LocalExponents e;
  GaussianRational excess(-1);
  for (std::size_t j = 0; j < n; ++j) {
    e.at_zero.push_back(GaussianRational(1) - p.beta[j]);
    e.at_infinity.push_back(p.alpha[j]);
    excess += p.beta[j] - p.alpha[j];
  }
  for (std::size_t k = 0; k + 2 <= n; ++k) e.at_one.emplace_back(static_cast<long>(k));
  e.at_one.push_back(excess);
  return e;
}

ReducibilityVerdict is_reducible(const HGParams& p) {
  p.validate();
  for (std::size_t i = 0; i < p.order(); ++i) {
    for (std::size_t j = 0; j < p.order(); ++j) {
      if (is_integer_difference(p.alpha[i], p.beta[j])) return {true, IndexPair{i, j}};
    }
  }
  return {};
}

ReducibilityPartition partition(const HGParams& p) {
  p.validate();
  ReducibilityPartition part;
  for (std::size_t i = 0; i < p.order(); ++i) {
    for (std::size_t j = 0; j < p.order(); ++j) {
      const GaussianRational d = p.alpha[i] - p.beta[j];
      if (!d.is_integer()) continue;
      const int s = sgn(d.re());
      (s == 0 ? part.zero : s > 0 ? part.positive : part.negative).push_back({i, j});
    }
  }
  return part;
}

bool contiguity_check(ContiguityKind kind, const HGParams& p, const ContiguityArgument& extra) {
  p.validate();
  const auto& a = p.alpha;
  const auto& b = p.beta;
  const ThetaOperator d = build_D(p);
  auto delta = [&]() -> const GaussianRational& {
    if (const auto* v = std::get_if<GaussianRational>(&extra)) return *v;
    throw std::invalid_argument(to_string(kind) + " expects a scalar argument");
  };
  auto integer = [&]() -> long {
    if (const auto* v = std::get_if<long>(&extra)) return *v;
    throw std::invalid_argument(to_string(kind) + " expects an integer argument");
  };
  auto index = [&]() -> std::size_t {
    const long j = integer();
    if (j < 0 || static_cast<std::size_t>(j) >= p.order()) throw std::invalid_argument("parameter index out of range");
    return static_cast<std::size_t>(j);
  };

  switch (kind) {
    case ContiguityKind::prop1_left: {
      // (t + delta - 1) D(a; b) = D(a, delta; b, delta)
      auto a2 = a, b2 = b;
      a2.push_back(delta());
      b2.push_back(delta());
      return ThetaOperator::theta_plus(delta() - 1) * d == expand_hypergeometric(a2, b2);
    }
    case ContiguityKind::prop1_right: {
      // D(a; b) (t + delta) = D(a, delta; b, delta + 1)
      auto a2 = a, b2 = b;
      a2.push_back(delta());
      b2.push_back(delta() + 1);
      return d * ThetaOperator::theta_plus(delta()) == expand_hypergeometric(a2, b2);
    }
    case ContiguityKind::cor2_alpha: {
      // D(a; b) (t + a_j - 1) = (t + a_j - 1) D(.., a_j - 1, ..; b)
      const std::size_t j = index();
      auto a2 = a;
      a2[j] -= 1;
      const ThetaOperator f = ThetaOperator::theta_plus(a[j] - 1);
      return d * f == f * expand_hypergeometric(a2, b);
    }
    case ContiguityKind::cor2_beta: {
      // D(a; b) (t + b_j) = (t + b_j - 1) D(a; .., b_j + 1, ..)
      const std::size_t j = index();
      auto b2 = b;
      b2[j] += 1;
      return d * ThetaOperator::theta_plus(b[j]) == ThetaOperator::theta_plus(b[j] - 1) * expand_hypergeometric(a, b2);
    }
    case ContiguityKind::prop3_shift: {
      // D(a; b) z^s = z^s D(a + s; b + s)
      const long s = integer();
      auto a2 = a, b2 = b;
      for (auto& x : a2) x += s;
      for (auto& x : b2) x += s;
      return d * ThetaOperator::z(s) == ThetaOperator::z(s) * expand_hypergeometric(a2, b2);
    }
  }
  throw std::invalid_argument("unknown contiguity kind");
}

HGParams canonical_shift_class(const HGParams& p) {
  p.validate();
  for (std::size_t i = 0; i < p.order(); ++i) {
    for (std::size_t j = 0; j < p.order(); ++j) {
      if (is_integer_difference(p.beta[j], p.alpha[i])) {
        throw PreconditionError("canonical_shift_class: beta_j - alpha_i is an integer for " + pair_name(i, j));
      }
    }
  }
  HGParams r = p;
  for (auto& x : r.alpha) x -= floor_real(x);
  for (auto& x : r.beta) x -= floor_real(x);
  return r;
}

Factorization factor_reducible(const HGParams& p) {
  p.validate();
  const std::size_t n = p.order();
  std::vector<bool> used_i(n, false), used_j(n, false);
  Factorization f;
  for (;;) {
    std::optional<IndexPair> best;
    GaussianRational best_diff;
    for (std::size_t i = 0; i < n; ++i) {
      if (used_i[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (used_j[j]) continue;
        const GaussianRational d = p.alpha[i] - p.beta[j];
        if (!d.is_integer() || sgn(d.re()) < 0) continue;
        if (!best || d.re() < best_diff.re()) {
          best = IndexPair{i, j};
          best_diff = d;
        }
      }
    }
    if (!best) break;
    used_i[best->i] = used_j[best->j] = true;
    f.matching.push_back(*best);
  }
  if (f.matching.empty()) throw PreconditionError("factor_reducible: no admissible matching");

  // Raising beta_j to alpha_i through the contiguity chain gives
  // D(p) * R_k = R_k * (t + beta_j - 1) * D(p without the pair),
  // R_k = prod_{u=0}^{m-1} (t + beta_j + u), m = alpha_i - beta_j.
  f.multiplier = ThetaOperator(1);
  ThetaOperator linear(1);
  std::vector<GaussianRational> multiplier_roots;
  for (const auto& [i, j] : f.matching) {
    const long m = (p.alpha[i] - p.beta[j]).re().get_num().get_si();
    for (long u = 0; u < m; ++u) {
      f.multiplier = f.multiplier * ThetaOperator::theta_plus(p.beta[j] + u);
      multiplier_roots.push_back(-(p.beta[j] + u));
    }
    f.linear_factors.push_back(p.beta[j]);
    linear = linear * ThetaOperator::theta_plus(p.beta[j] - 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!used_i[i]) f.reduced.alpha.push_back(p.alpha[i]);
    if (!used_j[i]) f.reduced.beta.push_back(p.beta[i]);
  }
  const ThetaOperator right = linear * expand_hypergeometric(f.reduced.alpha, f.reduced.beta);
  f.identity_holds = build_D(p) * f.multiplier == f.multiplier * right;
  f.multiplier_coprime = !shares_euler_solution(multiplier_roots, right);
  return f;
}

std::string to_string(ContiguityKind kind) {
  switch (kind) {
    case ContiguityKind::prop1_left: return "prop1_left";
    case ContiguityKind::prop1_right: return "prop1_right";
    case ContiguityKind::cor2_alpha: return "cor2_alpha";
    case ContiguityKind::cor2_beta: return "cor2_beta";
    case ContiguityKind::prop3_shift: return "prop3_shift";
  }
  return "unknown";
}

ContiguityKind contiguity_kind_from_string(std::string_view name) {
  for (auto k : {ContiguityKind::prop1_left, ContiguityKind::prop1_right, ContiguityKind::cor2_alpha,
                 ContiguityKind::cor2_beta, ContiguityKind::prop3_shift}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown contiguity kind '" + std::string(name) + "'");
}

}  // namespace levelt
