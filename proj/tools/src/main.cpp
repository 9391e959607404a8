#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ippp_cli/commands.hpp"
#include "ippp_cli/config.hpp"

namespace {

struct FlagKey {
  const char* flag;
  const char* key;
  const char* desc;
};

// Every flag is a string override for the matching config key; numeric
// validation happens in one place when the config resolves.
constexpr FlagKey kRunFlags[] = {
    {"--fixture", "fixture",
     "Instance: qp1d, qp5d, convexqp, weaklyconvex, mnpc, mnpc_synthetic"},
    {"--name", "name", "Run label used in summaries"},
    {"--dataset", "dataset", "LIBSVM file for the mnpc fixture"},
    {"--r", "r", "Comma list of loss caps (mnpc)"},
    {"--lambda", "lambda", "Model-norm radius (mnpc)"},
    {"--lift", "lift", "Feature-lift constant, 0 disables (mnpc)"},
    {"--objective-class", "objective_class",
     "Label whose class forms the objective (mnpc)"},
    {"--normalize", "normalize", "Per-feature max-abs scaling: on/off"},
    {"--classes", "classes", "Class count (mnpc_synthetic)"},
    {"--per-class", "per_class", "Points per class (mnpc_synthetic)"},
    {"--dim", "dim", "Feature / variable dimension for synthetic fixtures"},
    {"--seed", "seed", "Instance seed (IPPP_SEED env overrides)"},
    {"--x0", "x0", "Comma list starting point"},
    {"--schedule", "schedule", "convex, nonconvex, or constant"},
    {"--beta", "beta", "Penalty coefficient; 'auto' tunes constant schedule"},
    {"--gamma", "gamma", "Proximal coefficient (gamma-form schedules)"},
    {"--rho0", "rho0", "Declared objective weak convexity"},
    {"--rho-c", "rho_c", "Declared aggregate constraint curvature"},
    {"--option", "option", "Iterate selection rule: I or II"},
    {"--eps", "eps", "Target stationarity tolerance"},
    {"--k-max", "k_max", "Outer iteration cap"},
    {"--max-prox-steps", "max_prox_steps",
     "Cumulative proximal step cap, -1 disables"},
    {"--L-ini", "L_ini", "Initial curvature estimate"},
    {"--mu0", "mu0", "Initial strong-convexity estimate"},
    {"--L-min", "L_min", "Curvature floor"},
    {"--gamma-inc", "gamma_inc", "Line-search growth factor"},
    {"--gamma-dec", "gamma_dec", "Curvature relaxation factor"},
    {"--gamma-sc", "gamma_sc", "Strong-convexity shrink factor"},
    {"--theta-sc", "theta_sc", "Restart threshold"},
    {"--inner-max-steps", "inner_max_steps", "Per-subproblem step cap"},
    {"--trace", "trace", "Trace CSV output path"},
    {"--report", "report", "Certificate output path"},
    {"--timing", "timing",
     "on records wall clock in traces (breaks bit-identical output)"},
};

void add_override_flags(CLI::App* sub, ippp_cli::ConfigMap& overrides) {
  for (const FlagKey& fk : kRunFlags) {
    sub->add_option_function<std::string>(
        fk.flag,
        [&overrides, key = fk.key](const std::string& v) { overrides[key] = v; },
        fk.desc);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Proximal-point penalty solver for smooth constrained problems"};
  app.require_subcommand(1);

  std::string solve_config, check_config, point_path;
  ippp_cli::ConfigMap solve_overrides, check_overrides, bench_overrides;
  std::vector<std::string> bench_configs;
  ippp_cli::BenchPaths bench_paths;
  int bench_jobs = 1;

  CLI::App* solve = app.add_subcommand("solve", "Run the outer solver");
  solve->add_option("--config", solve_config, "Config file (key = value)");
  add_override_flags(solve, solve_overrides);

  CLI::App* check = app.add_subcommand("check", "Certify a candidate point");
  check->add_option("--config", check_config, "Config file (key = value)");
  check->add_option("--point", point_path, "Candidate point file")->required();
  add_override_flags(check, check_overrides);

  CLI::App* bench =
      app.add_subcommand("bench", "Run a set of configs and compare");
  bench->add_option("--config", bench_configs, "Config file, repeatable");
  bench->add_option("--summary", bench_paths.summary, "Summary CSV path");
  bench->add_option("--svg", bench_paths.svg, "Chart output path");
  bench->add_option("--jobs", bench_jobs, "Concurrent runs");
  add_override_flags(bench, bench_overrides);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) {
      ippp_cli::ConfigMap cfg;
      if (!solve_config.empty()) cfg = ippp_cli::parse_config_file(solve_config);
      ippp_cli::merge_config(cfg, solve_overrides);
      return ippp_cli::cmd_solve(cfg);
    }
    if (check->parsed()) {
      ippp_cli::ConfigMap cfg;
      if (!check_config.empty()) cfg = ippp_cli::parse_config_file(check_config);
      ippp_cli::merge_config(cfg, check_overrides);
      return ippp_cli::cmd_check(cfg, point_path);
    }
    std::vector<ippp_cli::ConfigMap> configs;
    for (const std::string& path : bench_configs) {
      ippp_cli::ConfigMap cfg = ippp_cli::parse_config_file(path);
      if (!cfg.count("name")) {
        auto slash = path.find_last_of('/');
        std::string stem =
            slash == std::string::npos ? path : path.substr(slash + 1);
        if (auto dot = stem.find_last_of('.'); dot != std::string::npos)
          stem.resize(dot);
        cfg["name"] = stem;
      }
      ippp_cli::merge_config(cfg, bench_overrides);
      configs.push_back(std::move(cfg));
    }
    return ippp_cli::cmd_bench(std::move(configs), bench_paths, bench_jobs);
  } catch (const std::exception& e) {
    std::cerr << argv[0] << ": " << e.what() << "\n";
    return 1;
  }
}
