#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "levelt/commands.hpp"
#include "levelt/error.hpp"

namespace {

levelt::Json read_input(const std::string& path) {
  if (path == "-") return levelt::Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return levelt::Json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergeometric operators, contiguity identities and Levelt normal forms."};
  app.require_subcommand(1, 1);

  std::string input = "-";
  double tol = 1e-10;
  std::uint64_t seed = 1;
  long count = 10;
  long n = 0, s = 0;
  std::optional<long> irr, h0;
  bool pretty = false;
  bool compact = false;
  app.fallthrough();
  auto* json_flag = app.add_flag("--json", compact, "Compact JSON output (default)");
  app.add_flag("--pretty", pretty, "Indent the JSON output")->excludes(json_flag);

  auto* analyze = app.add_subcommand("analyze", "Exponents, reducibility and factorization of D(alpha; beta)");
  auto* monodromy = app.add_subcommand("monodromy", "Numeric monodromy triple and its checks");
  auto* rigidity = app.add_subcommand("rigidity", "Frame, spectrum certificate and normal form of a matrix tuple");
  auto* normal_form = app.add_subcommand("normal-form", "Levelt normal form of a matrix tuple");
  auto* verify = app.add_subcommand("verify-identities", "Seeded sweep of the contiguity identities");
  auto* counts = app.add_subcommand("counts", "Parameter counts and extension dimension");

  for (auto* sub : {analyze, monodromy, rigidity, normal_form}) sub->add_option("--input", input, "JSON file, - for stdin");
  monodromy->add_option("--tol", tol, "Tolerance for the product relation");
  monodromy->add_option("--seed", seed, "Seed of the random conjugation");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--count", count, "Number of parameter sets");
  counts->add_option("--n", n, "Rank")->required();
  counts->add_option("--s", s, "Number of singular points")->required();
  counts->add_option("--irr", irr, "Irregularity");
  counts->add_option("--h0", h0, "Dimension of global sections");

  CLI11_PARSE(app, argc, argv);

  try {
    levelt::Report report;
    if (*analyze) report = levelt::cmd_analyze(read_input(input));
    else if (*monodromy) report = levelt::cmd_monodromy(read_input(input), tol, seed);
    else if (*rigidity) report = levelt::cmd_rigidity(read_input(input));
    else if (*normal_form) report = levelt::cmd_normal_form(read_input(input));
    else if (*verify) report = levelt::cmd_verify_identities(seed, count);
    else report = levelt::cmd_counts(n, s, irr, h0);
    std::cout << report.body.dump(pretty ? 2 : -1) << '\n';
    return report.ok ? 0 : 1;
  } catch (const levelt::PreconditionError& e) {
    std::cout << levelt::Json{{"error", {{"kind", "precondition"}, {"message", e.what()}}}}.dump(pretty ? 2 : -1) << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
