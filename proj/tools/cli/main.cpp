#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mae/errors.hpp"
#include "mae_cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mae::Error(mae::ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mae::cli;
  CLI::App app{"Third-order Monge-Ampere equations and their characteristic distributions"};
  app.require_subcommand(1);
  app.fallthrough();

  bool pretty = false;
  bool json = false;
  std::string probe_point;
  Options opts;
  app.add_flag("--json", json, "Compact JSON output (default)");
  app.add_flag("--pretty", pretty, "Indented JSON output");
  app.add_option("--seed", opts.seed, "Probe seed");
  app.add_option("--probe-point", probe_point, "Base point as a JSON object of coordinates");

  std::string expr;
  std::string file;
  std::size_t probes = 4;
  std::vector<std::string> candidates;
  std::optional<int> degree;
  std::string suite;
  std::size_t n_cases = 50;

  auto* classify_cmd = app.add_subcommand("classify", "Classify an equation");
  classify_cmd->add_option("expr", expr)->required();
  auto* cone_cmd = app.add_subcommand("cone", "Characteristic lines over a base point");
  cone_cmd->add_option("expr", expr)->required();
  cone_cmd->add_option("--probes", probes, "Random fibre probes beyond the four canonical ones");
  cone_cmd->add_option("--point", probe_point, "Alias of --probe-point");
  auto* build_cmd = app.add_subcommand("build", "Equation of a distribution");
  build_cmd->add_option("--distribution", file)->required();
  auto* recover_cmd = app.add_subcommand("recover", "Distribution of a Goursat-type equation");
  recover_cmd->add_option("expr", expr)->required();
  auto* orth_cmd = app.add_subcommand("orthogonal", "Orthogonal pair of a quasi-linear distribution");
  orth_cmd->add_option("--distribution", file)->required();
  auto* int_cmd = app.add_subcommand("integrals", "Intermediate integrals");
  int_cmd->add_option("expr", expr)->required();
  int_cmd->add_option("--candidate", candidates, "Candidate integral, repeatable");
  int_cmd->add_option("--search-degree", degree, "Search first integrals up to this degree");
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("--suite", suite)->required();
  verify_cmd->add_option("--n-cases", n_cases);

  CLI11_PARSE(app, argc, argv);

  Outcome out;
  try {
    if (!probe_point.empty()) opts.probe_point = parse_probe_point(Json::parse(probe_point));
    if (classify_cmd->parsed()) out = classify(expr, opts);
    else if (cone_cmd->parsed()) out = cone(expr, probes, opts);
    else if (build_cmd->parsed()) out = build(slurp(file), opts);
    else if (recover_cmd->parsed()) out = recover(expr, opts);
    else if (orth_cmd->parsed()) out = orthogonal(slurp(file), opts);
    else if (int_cmd->parsed()) out = integrals(expr, candidates, degree, opts);
    else out = verify(suite, n_cases, opts);
  } catch (const Json::parse_error& e) {
    std::cerr << "probe point: " << e.what() << "\n";
    return kParseError;
  } catch (const mae::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == mae::ErrorCode::InvalidArgument ? kDegenerate : kParseError;
  }
  std::cout << render(out, pretty && !json);
  return out.exit_code;
}
