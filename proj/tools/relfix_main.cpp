#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "relfix/scenario.hpp"

namespace {

int read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read scenario file: " << path << "\n";
    return 2;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return 0;
}

bool parse_seed_range(const std::string& text, std::uint64_t& lo, std::uint64_t& hi) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoull(text);
      return true;
    }
    lo = std::stoull(text.substr(0, dots));
    hi = std::stoull(text.substr(dots + 2));
    return lo <= hi;
  } catch (...) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed-point solver and certifier for relational metric instances"};
  app.require_subcommand(1);

  std::string scenario_path;
  relfix::CertifyOptions cert_opts;
  auto* certify = app.add_subcommand("certify", "verify the contraction hypotheses");
  certify->add_option("scenario", scenario_path, "scenario file")->required();
  certify->add_option("--horizon", cert_opts.horizon, "bounded recurrence window");

  std::string iter_path;
  double from = 0.0;
  std::optional<int> budget;
  std::optional<double> tol;
  auto* iterate = app.add_subcommand("iterate", "run the fixed-point iteration");
  iterate->add_option("scenario", iter_path, "scenario file")->required();
  iterate->add_option("--from", from, "start point")->required();
  iterate->add_option("--budget", budget, "max steps");
  iterate->add_option("--tol", tol, "stop tolerance (interval carriers)");

  relfix::SearchOptions sopts;
  std::string seeds = "1..100";
  auto* search = app.add_subcommand("search", "randomized validation sweep");
  search->add_option("--seeds", seeds, "seed range a..b");
  search->add_option("--n", sopts.max_n, "max carrier size");
  search->add_option("--density", sopts.density, "relation density in (0,1]");
  search->add_flag("--cross-check", sopts.cross_check, "compare against the brute oracle");
  search->add_flag("--verbose", sopts.verbose, "per-seed lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (certify->parsed()) {
    std::string text;
    if (int rc = read_file(scenario_path, text)) return rc;
    return relfix::cmd_certify(text, cert_opts, std::cout, std::cerr);
  }
  if (iterate->parsed()) {
    std::string text;
    if (int rc = read_file(iter_path, text)) return rc;
    return relfix::cmd_iterate(text, from, budget, tol, std::cout, std::cerr);
  }
  if (search->parsed()) {
    if (!parse_seed_range(seeds, sopts.seed_lo, sopts.seed_hi)) {
      std::cerr << "bad --seeds range: " << seeds << "\n";
      return 2;
    }
    return relfix::cmd_search(sopts, std::cout, std::cerr);
  }
  return 2;
}
