#include "levelt/json_io.hpp"

#include <stdexcept>

namespace levelt {

Json to_json(const GaussianRational& x) { return x.str(); }

GaussianRational scalar_from_json(const Json& j) {
  if (j.is_string()) return GaussianRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return GaussianRational(j.get<long>());
  throw std::invalid_argument("scalar must be a string or an integer, got " + j.dump());
}

Json to_json(const std::vector<GaussianRational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const ExactMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

ExactMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  const std::size_t cols = j.front().size();
  std::vector<ExactVector> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw std::invalid_argument("matrix rows must be arrays of equal length");
    ExactVector v;
    for (const auto& x : row) v.push_back(scalar_from_json(x));
    rows.push_back(std::move(v));
  }
  return ExactMatrix::from_rows(rows);
}

Json to_json(const HGParams& p) { return Json{{"alpha", to_json(p.alpha)}, {"beta", to_json(p.beta)}}; }

HGParams params_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("beta"))
    throw std::invalid_argument("parameters must be an object with \"alpha\" and \"beta\"");
  HGParams p;
  for (const auto& x : j.at("alpha")) p.alpha.push_back(scalar_from_json(x));
  for (const auto& x : j.at("beta")) p.beta.push_back(scalar_from_json(x));
  p.validate();
  return p;
}

Json to_json(const MatrixTuple& t) {
  Json ms = Json::array();
  for (const auto& m : t.matrices) ms.push_back(to_json(m));
  return Json{{"n", t.dim()}, {"matrices", ms}};
}

MatrixTuple tuple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrices")) throw std::invalid_argument("tuple must be an object with \"matrices\"");
  MatrixTuple t;
  for (const auto& m : j.at("matrices")) t.matrices.push_back(matrix_from_json(m));
  t.validate();
  if (j.contains("n") && j.at("n").get<std::size_t>() != t.dim())
    throw std::invalid_argument("\"n\" does not match the matrix dimension");
  return t;
}

Json to_json(const FloatMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real() + 0.0, m(r, c).imag() + 0.0}));
    out.push_back(row);
  }
  return out;
}

}  // namespace levelt
