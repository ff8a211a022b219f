/*
   Copyright 2026 The semirad Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "cli/job.hpp"
#include "semirad/errors.hpp"

int main(int argc, char** argv) {
  using namespace semirad::cli;

  JobConfig cfg;
  std::string command = "radius";
  std::string format = "table";
  std::string tolerances;

  CLI::App app{"A-numerical radius, bound and polynomial zero calculator", "semirad"};
  app.add_option("--command,-c", command, "radius | bounds | blockbounds | zeros | range")
      ->required();
  app.add_option("--input,-i", cfg.input_path, "JSON input file")->required();
  app.add_option("--format,-f", format, "table | json | svg")->capture_default_str();
  app.add_option("--output,-o", cfg.output_path, "write here instead of stdout");
  app.add_option("--theta-grid", cfg.theta_grid, "support-function angles")->capture_default_str();
  app.add_option("--phi-grid", cfg.phi_grid, "H_phi search grid")->capture_default_str();
  app.add_option("--mc-samples", cfg.mc_samples, "Monte Carlo cross-check samples (0 = off)")
      ->capture_default_str();
  app.add_option("--restarts", cfg.restarts, "weight optimizer restarts")->capture_default_str();
  app.add_option("--iters", cfg.iters, "weight optimizer evaluations per restart")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app.add_option("--tolerances", tolerances, "herm_tol,rank_tol (overrides SEMIRAD_TOLERANCES)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.command = parse_command(command);
    cfg.output_format = parse_format(format);
    if (tolerances.empty()) {
      if (const char* env = std::getenv("SEMIRAD_TOLERANCES"); env && *env) tolerances = env;
    }
    if (!tolerances.empty()) cfg.tolerances = parse_tolerances(tolerances);
  } catch (const semirad::Error& e) {
    std::cerr << "semirad: error [" << semirad::to_string(e.code()) << "]: " << e.what() << '\n';
    return 2;
  }

  return run(cfg, std::cout, std::cerr);
}
