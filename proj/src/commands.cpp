#include "levelt/commands.hpp"

#include <map>

#include "levelt/dmodule_ext.hpp"
#include "levelt/error.hpp"
#include "levelt/random.hpp"

namespace levelt {

namespace {

Json index_pair(const IndexPair& p) { return Json::array({p.i + 1, p.j + 1}); }

Json index_pairs(const std::vector<IndexPair>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(index_pair(p));
  return out;
}

Json one_based(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto k : v) out.push_back(k + 1);
  return out;
}

Json subspace_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(v));
  return basis;
}

Json frame_json(const CommonFrame& f) {
  return Json{{"side", f.side == FrameSide::rows ? "rows" : "columns"},
              {"shared_indices", one_based(f.shared_indices)},
              {"basis_change", to_json(f.basis_change)}};
}

Json error_json(const std::exception& e) { return Json{{"error", e.what()}}; }

}  // namespace

Report cmd_analyze(const Json& params) {
  const HGParams p = params_from_json(params);
  Report r;
  Json& b = r.body;
  b["params"] = to_json(p);
  b["operator"] = build_D(p).str();

  const LocalExponents e = exponents(p);
  b["exponents"] = Json{{"zero", to_json(e.at_zero)}, {"one", to_json(e.at_one)}, {"infinity", to_json(e.at_infinity)}};
  GaussianRational total;
  for (const auto* list : {&e.at_zero, &e.at_one, &e.at_infinity})
    for (const auto& x : *list) total += x;
  const long n = static_cast<long>(p.order());
  const bool fuchs = total == GaussianRational(n * (n - 1) / 2);
  b["exponent_sum"] = Json{{"value", to_json(total)}, {"expected", to_json(GaussianRational(n * (n - 1) / 2))}, {"holds", fuchs}};
  r.ok = r.ok && fuchs;

  const ReducibilityVerdict v = is_reducible(p);
  b["reducible"] = v.reducible;
  b["witness"] = v.witness ? index_pair(*v.witness) : Json(nullptr);
  const ReducibilityPartition part = partition(p);
  b["partition"] = Json{{"E0", index_pairs(part.zero)}, {"Eplus", index_pairs(part.positive)}, {"Eminus", index_pairs(part.negative)}};

  try {
    b["canonical_shift_class"] = to_json(canonical_shift_class(p));
  } catch (const PreconditionError& ex) {
    b["canonical_shift_class"] = Json{{"undefined", ex.what()}};
  }

  if (v.reducible) {
    try {
      const Factorization f = factor_reducible(p);
      b["factorization"] = Json{{"matching", index_pairs(f.matching)},
                                {"linear_factors", to_json(f.linear_factors)},
                                {"reduced", to_json(f.reduced)},
                                {"multiplier", f.multiplier.str()},
                                {"identity_holds", f.identity_holds},
                                {"multiplier_coprime", f.multiplier_coprime}};
      r.ok = r.ok && f.identity_holds;
    } catch (const PreconditionError& ex) {
      b["factorization"] = error_json(ex);
    }
  }
  b["ok"] = r.ok;
  return r;
}

Report cmd_monodromy(const Json& params, double tol, std::uint64_t seed) {
  const HGParams p = params_from_json(params);
  const MonodromyTriple t = build_monodromy(p, tol);
  Report r;
  Json& b = r.body;
  b["m0"] = to_json(t.m0);
  b["m1"] = to_json(t.m1);
  b["minf"] = to_json(t.minf);
  b["residual"] = t.residual;

  const double spectral_tol = std::max(tol, 1e-8);
  Complex excess = 1;
  for (std::size_t j = 0; j < p.order(); ++j) excess *= unit_root(p.beta[j] - p.alpha[j]);
  const bool product = t.residual <= tol;
  const bool det = std::abs(t.m1.determinant() - excess) <= spectral_tol;
  const bool reflection = check_pseudo_reflection_numeric(t.m1, spectral_tol);
  bool rigid = false;
  try {
    rigid = rigidity_check_numeric(t, spectral_tol, seed);
  } catch (const VerificationError& ex) {
    b["rigidity_error"] = ex.what();
  }
  b["checks"] = Json{{"product_relation", product}, {"det_m1", det}, {"m1_pseudo_reflection", reflection}, {"rigidity", rigid}};
  r.ok = product && det && reflection && rigid;
  b["ok"] = r.ok;
  return r;
}

Report cmd_rigidity(const Json& tuple) {
  const MatrixTuple t = tuple_from_json(tuple);
  Report r;
  Json& b = r.body;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!is_invertible(t[i])) throw PreconditionError("A_" + std::to_string(i + 1) + " is singular");
  }
  Json pairs = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      pairs.push_back(Json{{"pair", Json::array({i + 1, j + 1})}, {"pseudo_reflection", is_pseudo_reflection(t[i] * inverse(t[j]))}});
    }
  }
  b["pairs"] = pairs;
  const Polynomial gcd = char_poly_gcd(t);
  b["char_poly_gcd"] = gcd.str();
  const std::size_t n = t.dim();
  const std::size_t algebra = algebra_span_dimension(t);
  b["algebra_dimension"] = algebra;

  std::optional<CommonFrame> frame;
  try {
    frame = common_frame(t);
    b["frame"] = frame_json(*frame);
  } catch (const std::exception& ex) {
    b["frame"] = error_json(ex);
  }
  const bool disjoint = gcd.degree() == 0;
  b["irreducible"] = frame ? Json(disjoint) : Json(nullptr);
  if (frame) r.ok = r.ok && (disjoint == (algebra == n * n));

  if (frame && !disjoint) {
    Json cert{{"gcd", gcd.str()}};
    if (gcd.degree() == 1) {
      const GaussianRational lambda = -gcd.coefficient(0);
      const StabilizedSubspace s = find_stabilized_subspace(t, *frame, lambda);
      const SpectrumCertificate c = common_spectrum_certificate(t, *frame, s.subspace);
      cert["eigenvalue"] = to_json(lambda);
      cert["stabilized"] = Json{{"kind", s.kind == StabilizedSubspace::Kind::line ? "line" : "hyperplane"},
                                {"basis", subspace_json(s.subspace)}};
      cert["block_factor"] = c.factor.str();
    }
    b["certificate"] = cert;
  }
  if (frame && disjoint && frame->side == FrameSide::columns) {
    const NormalForm nf = levelt_normal_form(t, *frame);
    Json canon = Json::array();
    for (const auto& m : nf.canon.matrices) canon.push_back(to_json(m));
    b["normal_form"] = Json{{"basis_change", to_json(nf.basis_change)}, {"canon", canon}};
  }
  b["ok"] = r.ok;
  return r;
}

Report cmd_normal_form(const Json& tuple) {
  const MatrixTuple t = tuple_from_json(tuple);
  const CommonFrame frame = common_frame(t);
  const NormalForm nf = levelt_normal_form(t, frame);
  Report r;
  Json canon = Json::array();
  for (const auto& m : nf.canon.matrices) canon.push_back(to_json(m));
  r.body = Json{{"frame", frame_json(frame)}, {"basis_change", to_json(nf.basis_change)}, {"canon", canon}, {"ok", true}};
  return r;
}

HGParams random_params(Rng& rng, std::size_t min_order, std::size_t max_order) {
  const auto n = static_cast<std::size_t>(rng.uniform(static_cast<long>(min_order), static_cast<long>(max_order)));
  HGParams p;
  for (std::size_t k = 0; k < n; ++k) {
    p.alpha.push_back(rng.gaussian(9, 6));
    p.beta.push_back(rng.gaussian(9, 6));
  }
  return p;
}

Report cmd_verify_identities(std::uint64_t seed, long count) {
  if (count < 1) throw std::invalid_argument("--count must be at least 1");
  Rng rng(seed);
  std::map<std::string, std::pair<long, long>> tally;
  for (auto k : {ContiguityKind::prop1_left, ContiguityKind::prop1_right, ContiguityKind::cor2_alpha,
                 ContiguityKind::cor2_beta, ContiguityKind::prop3_shift})
    tally[to_string(k)] = {0, 0};
  Report r;
  for (long c = 0; c < count; ++c) {
    const HGParams p = random_params(rng, 2, 5);
    const GaussianRational delta = rng.gaussian(9, 6);
    const long j = rng.uniform(0, static_cast<long>(p.order()) - 1);
    const long s = rng.uniform(-3, 3);
    const std::pair<ContiguityKind, ContiguityArgument> cases[] = {
        {ContiguityKind::prop1_left, delta}, {ContiguityKind::prop1_right, delta}, {ContiguityKind::cor2_alpha, j},
        {ContiguityKind::cor2_beta, j},      {ContiguityKind::prop3_shift, s},
    };
    for (const auto& [kind, arg] : cases) {
      const bool pass = contiguity_check(kind, p, arg);
      auto& [passed, failed] = tally[to_string(kind)];
      (pass ? passed : failed) += 1;
      r.ok = r.ok && pass;
    }
  }
  Json kinds = Json::object();
  for (const auto& [name, pf] : tally) kinds[name] = Json{{"passed", pf.first}, {"failed", pf.second}};
  r.body = Json{{"seed", seed}, {"count", count}, {"kinds", kinds}, {"ok", r.ok}};
  return r;
}

Report cmd_counts(long n, long s, std::optional<long> irr, std::optional<long> h0) {
  const ParameterCounts c = parameter_counts(n, s);
  Report r;
  r.body = Json{{"n", n}, {"s", s}, {"equation_count", c.equation_count}, {"monodromy_count", c.monodromy_count}, {"rigid", c.rigid}};
  if (irr || h0) r.body["ext_dimension"] = ext_dimension(n, s, irr.value_or(0), h0.value_or(0));
  r.body["ok"] = true;
  return r;
}

}  // namespace levelt
