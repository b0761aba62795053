#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "lrdens/cli.hpp"

int main(int argc, char** argv) {
  using lrdens::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"Coprimality density of integer linear recurrences"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--rec", cfg.rec_json, "recurrence as JSON {\"coeffs\":[...],\"initial\":[...]}");
  app.add_option("--rec-file", cfg.rec_file, "file holding the recurrence JSON");
  app.add_option("--x", cfg.x, "count range [1, x]");
  app.add_option("--y", cfg.y, "prime bound for delta_y");
  app.add_option("--pmax", cfg.pmax, "largest prime for T-values and tail sums");
  app.add_option("--gamma", cfg.gamma, "exponent in P_gamma, e.g. 1/3 (default 1/(k+1))");
  app.add_option("--cap-window", cfg.cap_window, "largest delta_y window");
  app.add_option("--cap-states", cfg.cap_states, "largest number of states in a period search");
  app.add_option("--format", cfg.format, "json or csv");
  app.add_option("--threads", cfg.threads, "worker threads");
  app.add_option("--seed", cfg.seed, "seed for Monte Carlo estimates");

  const std::pair<const char*, const char*> commands[] = {
      {"classify", "split u into w and v and list A_u when it is finite"},
      {"density", "count A_u up to x with delta_y and the T-value tail"},
      {"delta", "exact density delta_y of n sharing a prime p <= y with u_n"},
      {"tvalues", "T_u(p) and P_gamma membership for primes up to pmax"},
      {"bench", "time the sieve count up to x"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : lrdens::cli::kUsage;
  }
  return lrdens::cli::run(cfg, std::cout, std::cerr);
}
