#pragma once

#include <cstdint>
#include <optional>

#include "levelt/json_io.hpp"

namespace levelt {

/// A command's JSON report. ok is false when some verification failed.
struct Report {
  Json body;
  bool ok = true;
};

Report cmd_analyze(const Json& params);
Report cmd_monodromy(const Json& params, double tol, std::uint64_t seed);
Report cmd_rigidity(const Json& tuple);
Report cmd_normal_form(const Json& tuple);
Report cmd_verify_identities(std::uint64_t seed, long count);
Report cmd_counts(long n, long s, std::optional<long> irr, std::optional<long> h0);

/// Random parameters for the identity sweep: order 2..5, small Gaussian rationals.
HGParams random_params(class Rng& rng, std::size_t min_order, std::size_t max_order);

}  // namespace levelt
