#pragma once

#include <json.hpp>

#include "levelt/hypergeometric.hpp"
#include "levelt/monodromy.hpp"
#include "levelt/rigidity.hpp"

namespace levelt {

using Json = nlohmann::json;

/// Scalars travel as canonical strings ("3/2", "1/2+1/3*i"); integers are also accepted on input.
Json to_json(const GaussianRational& x);
GaussianRational scalar_from_json(const Json& j);

Json to_json(const std::vector<GaussianRational>& v);
Json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

/// {"alpha": [...], "beta": [...]}
Json to_json(const HGParams& p);
HGParams params_from_json(const Json& j);

/// {"n": 3, "matrices": [[[...], ...], ...]}
Json to_json(const MatrixTuple& t);
MatrixTuple tuple_from_json(const Json& j);

/// Rows of [re, im] pairs.
Json to_json(const FloatMatrix& m);

}  // namespace levelt
