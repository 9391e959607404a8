#include "ippp_cli/commands.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <thread>

#include "ippp/stationarity.hpp"
#include "ippp/trace_io.hpp"
#include "ippp_cli/svg.hpp"

namespace ippp_cli {

namespace {

const char* status_name(ippp::SolveStatus s) {
  switch (s) {
    case ippp::SolveStatus::Converged:
      return "converged";
    case ippp::SolveStatus::IterationLimit:
      return "iteration_limit";
    default:
      return "step_limit";
  }
}

double selection_metric(const ippp::StationarityReport& rep,
                        ippp::RIndexOption option) {
  const double sf = std::max(rep.S, rep.F);
  return option == ippp::RIndexOption::OptionI ? std::max(sf, rep.C) : sf;
}

}  // namespace

int cmd_solve(const ConfigMap& cfg) {
  try {
    ResolvedRun run = resolve_run(cfg);
    const ippp::IpppResult res =
        ippp_solve(run.problem, run.schedule, run.x0, run.options);
    ippp::write_trace_file(res.trace, run.trace_path);

    const ippp::KktReport rep = ippp::eps_stationary_check(
        run.problem, res.x, res.multipliers, run.options.eps);
    const std::string block = ippp::format_kkt_report(rep);
    {
      std::ofstream out(run.report_path, std::ios::binary);
      if (!out) throw ConfigError("cannot open report file: " + run.report_path);
      out << block;
    }

    char buf[160];
    std::cout << block;
    std::snprintf(buf, sizeof buf, "max_metric = %.12g\n",
                  selection_metric(res.report, run.options.option));
    std::cout << buf << "R_K = " << res.trace.selected
              << "\nstatus = " << status_name(res.status)
              << "\ntotal_prox_steps = " << res.total_prox_steps << "\n";

    if (res.status != ippp::SolveStatus::Converged) return 2;
    const bool certified =
        run.options.option == ippp::RIndexOption::OptionI
            ? rep.verdict == ippp::KktVerdict::EpsStationary
            : rep.verdict != ippp::KktVerdict::NotStationary;
    return certified ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "solve: " << e.what() << "\n";
    return 1;
  }
}

int cmd_check(const ConfigMap& cfg, const std::string& point_path) {
  try {
    ResolvedProblem rp = resolve_problem(cfg);
    const CandidatePoint point = parse_point_file(point_path);
    if (point.x.size() != rp.problem.dim()) {
      std::cerr << "check: point has dimension " << point.x.size()
                << ", instance has " << rp.problem.dim() << "\n";
      return 1;
    }
    const auto m = static_cast<Eigen::Index>(rp.problem.ineq.size());
    const auto p = static_cast<Eigen::Index>(rp.problem.eq.size());

    ippp::Multipliers mult;
    if (!point.lambda && !point.y) {
      mult = ippp::stationarity_fit(rp.problem, point.x).mult;
    } else {
      mult.lambda = point.lambda ? *point.lambda : ippp::Vector::Zero(m);
      mult.y = point.y ? *point.y : ippp::Vector::Zero(p);
      if (mult.lambda.size() != m || mult.y.size() != p) {
        std::cerr << "check: multiplier sizes (" << mult.lambda.size() << ", "
                  << mult.y.size() << ") do not match instance (" << m << ", "
                  << p << ")\n";
        return 1;
      }
    }

    const ippp::KktReport rep =
        ippp::eps_stationary_check(rp.problem, point.x, mult, rp.eps);
    std::cout << ippp::format_kkt_report(rep);
    try {
      char buf[80];
      std::snprintf(buf, sizeof buf, "stationarity_measure = %.12g\n",
                    ippp::stationarity_measure(rp.problem, point.x));
      std::cout << buf;
    } catch (const std::exception&) {
      // Separable regularizers have no cone-generator measure; the report
      // above still stands.
    }

    switch (rep.verdict) {
      case ippp::KktVerdict::EpsStationary:
        return 0;
      case ippp::KktVerdict::WeakEpsStationary:
        return 3;
      default:
        return 4;
    }
  } catch (const std::exception& e) {
    std::cerr << "check: " << e.what() << "\n";
    return 1;
  }
}

namespace {

struct BenchOutcome {
  std::string name = "run";
  std::string fixture;
  std::string schedule;
  std::string option = "I";
  double eps = 0.0;
  bool ok = false;
  std::string error;
  ippp::IpppResult result;
};

BenchOutcome bench_one(ConfigMap cfg, std::size_t index) {
  BenchOutcome out;
  out.fixture = cfg.count("fixture") ? cfg["fixture"] : "";
  out.schedule = cfg.count("schedule") ? cfg["schedule"] : "";
  if (cfg.count("option")) out.option = cfg["option"];
  try {
    if (!cfg.count("name"))
      cfg["name"] = "run" + std::to_string(index) + "_" +
                    (out.fixture.empty() ? "unnamed" : out.fixture);
    if (!cfg.count("trace")) cfg["trace"] = cfg["name"] + "_trace.csv";
    ResolvedRun run = resolve_run(cfg);
    out.name = run.name;
    out.eps = run.options.eps;
    out.result = ippp_solve(run.problem, run.schedule, run.x0, run.options);
    ippp::write_trace_file(out.result.trace, run.trace_path);
    out.ok = true;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

int cmd_bench(std::vector<ConfigMap> configs, const BenchPaths& paths,
              int jobs) {
  if (configs.empty()) {
    std::cerr << "bench: no configs given\n";
    return 1;
  }

  std::vector<BenchOutcome> outcomes(configs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < configs.size(); ++i)
      outcomes[i] = bench_one(std::move(configs[i]), i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < configs.size();
           i = next.fetch_add(1))
        outcomes[i] = bench_one(std::move(configs[i]), i);
    };
    std::vector<std::future<void>> pool;
    const std::size_t n =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), configs.size());
    for (std::size_t t = 0; t < n; ++t)
      pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }

  bool any_failed = false;
  std::ofstream summary(paths.summary, std::ios::binary);
  if (!summary) {
    std::cerr << "bench: cannot open summary file: " << paths.summary << "\n";
    return 2;
  }
  summary << "name,fixture,schedule,option,eps,status,outer_iterations,"
             "total_prox_steps,R_K,S,F,C,max_metric\n";
  char buf[320];
  for (const BenchOutcome& o : outcomes) {
    if (!o.ok) {
      any_failed = true;
      std::cerr << "bench: run '" << o.name << "' failed: " << o.error << "\n";
      summary << o.name << ',' << o.fixture << ',' << o.schedule << ','
              << o.option << ",,failed,0,0,0,,,,\n";
      continue;
    }
    const ippp::StationarityReport& rep = o.result.report;
    const double metric = selection_metric(
        rep, o.option == "II" ? ippp::RIndexOption::OptionII
                              : ippp::RIndexOption::OptionI);
    std::snprintf(buf, sizeof buf,
                  "%s,%s,%s,%s,%.12g,%s,%ld,%lld,%ld,%.12g,%.12g,%.12g,%.12g\n",
                  o.name.c_str(), o.fixture.c_str(), o.schedule.c_str(),
                  o.option.c_str(), o.eps, status_name(o.result.status),
                  o.result.outer_iterations,
                  static_cast<long long>(o.result.total_prox_steps),
                  o.result.trace.selected, rep.S, rep.F, rep.C, metric);
    summary << buf;
  }
  summary.flush();

  std::vector<NamedTrace> traces;
  for (const BenchOutcome& o : outcomes)
    if (o.ok) traces.push_back({o.name, &o.result.trace});
  try {
    write_benchmark_svg(paths.svg, traces);
  } catch (const std::exception& e) {
    std::cerr << "bench: " << e.what() << "\n";
    any_failed = true;
  }
  return any_failed ? 2 : 0;
}

}  // namespace ippp_cli
