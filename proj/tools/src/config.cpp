#include "ippp_cli/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ippp/libsvm.hpp"
#include "ippp/mnpc.hpp"
#include "ippp/synthetic.hpp"
#include "ippp/theory_budget.hpp"

namespace ippp_cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& text, const std::string& key) {
  const char* s = text.c_str();
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *trim(end).c_str() != '\0')
    throw ConfigError("key '" + key + "': not a number: '" + text + "'");
  return v;
}

long parse_long(const std::string& text, const std::string& key) {
  const char* s = text.c_str();
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *trim(end).c_str() != '\0')
    throw ConfigError("key '" + key + "': not an integer: '" + text + "'");
  return v;
}

const std::string* find(const ConfigMap& cfg, const std::string& key) {
  auto it = cfg.find(key);
  return it == cfg.end() ? nullptr : &it->second;
}

std::string get_string(const ConfigMap& cfg, const std::string& key,
                       const std::string& fallback) {
  const std::string* v = find(cfg, key);
  return v ? *v : fallback;
}

double get_double(const ConfigMap& cfg, const std::string& key,
                  double fallback) {
  const std::string* v = find(cfg, key);
  return v ? parse_double(*v, key) : fallback;
}

long get_long(const ConfigMap& cfg, const std::string& key, long fallback) {
  const std::string* v = find(cfg, key);
  return v ? parse_long(*v, key) : fallback;
}

bool get_flag(const ConfigMap& cfg, const std::string& key, bool fallback) {
  const std::string* v = find(cfg, key);
  if (!v) return fallback;
  if (*v == "on" || *v == "true" || *v == "1") return true;
  if (*v == "off" || *v == "false" || *v == "0") return false;
  throw ConfigError("key '" + key + "': expected on/off, got '" + *v + "'");
}

std::uint64_t resolve_seed(const ConfigMap& cfg) {
  if (const char* env = std::getenv("IPPP_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw ConfigError(std::string("IPPP_SEED: not an integer: '") + env +
                        "'");
    return v;
  }
  return static_cast<std::uint64_t>(get_long(cfg, "seed", 0));
}

void scale_features_max_abs(ippp::Dataset& data) {
  if (data.classes.empty()) return;
  const Eigen::Index d = data.classes.front().cols();
  ippp::Vector scale = ippp::Vector::Zero(d);
  for (const ippp::Matrix& points : data.classes)
    scale = scale.cwiseMax(points.cwiseAbs().colwise().maxCoeff().transpose());
  for (ippp::Matrix& points : data.classes)
    for (Eigen::Index j = 0; j < d; ++j)
      if (scale[j] > 0.0) points.col(j) /= scale[j];
}

void move_class_to_front(ippp::Dataset& data, long label) {
  for (std::size_t k = 0; k < data.labels.size(); ++k) {
    if (data.labels[k] == label) {
      std::swap(data.classes[0], data.classes[k]);
      std::swap(data.labels[0], data.labels[k]);
      return;
    }
  }
  throw ConfigError("objective_class " + std::to_string(label) +
                    " not present in dataset");
}

ippp::ConstrainedProblem build_mnpc_problem(const ConfigMap& cfg,
                                            ippp::Dataset data) {
  if (!data.valid())
    throw ConfigError("mnpc: dataset needs at least two non-empty classes");
  if (get_flag(cfg, "normalize", false)) scale_features_max_abs(data);
  if (const std::string* oc = find(cfg, "objective_class"))
    move_class_to_front(data, parse_long(*oc, "objective_class"));
  const double lift = get_double(cfg, "lift", 0.0);
  if (lift > 0.0) data = ippp::lift_features(data, lift);

  const int K = data.num_classes();
  std::vector<double> r;
  if (const std::string* rv = find(cfg, "r")) {
    r = parse_number_list(*rv, "r");
  } else {
    r.assign(static_cast<std::size_t>(K - 1), 0.5 * (K - 1));
  }
  const double lambda = get_double(cfg, "lambda", 0.3);
  return ippp::mnpc_build(data, r, lambda);
}

}  // namespace

ConfigMap parse_config_text(std::istream& in, const std::string& origin) {
  ConfigMap cfg;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ": line " + std::to_string(line_no) +
                        ": expected key = value");
    const std::string key = trim(body.substr(0, eq));
    if (key.empty())
      throw ConfigError(origin + ": line " + std::to_string(line_no) +
                        ": empty key");
    cfg[key] = trim(body.substr(eq + 1));
  }
  return cfg;
}

ConfigMap parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_config_text(in, path);
}

void merge_config(ConfigMap& base, const ConfigMap& overrides) {
  for (const auto& [key, value] : overrides) base[key] = value;
}

std::vector<double> parse_number_list(const std::string& text,
                                      const std::string& key) {
  std::vector<double> out;
  std::stringstream parts(text);
  std::string item;
  while (std::getline(parts, item, ',')) {
    const std::string body = trim(item);
    if (body.empty())
      throw ConfigError("key '" + key + "': empty list element");
    out.push_back(parse_double(body, key));
  }
  return out;
}

ResolvedProblem resolve_problem(const ConfigMap& cfg) {
  const std::string* fixture = find(cfg, "fixture");
  if (!fixture) throw ConfigError("missing key 'fixture'");
  const std::uint64_t seed = resolve_seed(cfg);

  ResolvedProblem out;
  out.name = get_string(cfg, "name", *fixture);
  out.eps = get_double(cfg, "eps", 1e-3);

  if (*fixture == "qp1d") {
    out.problem = ippp::qp1d().problem;
    out.x0 = ippp::Vector::Constant(1, 1.0);
  } else if (*fixture == "qp5d") {
    out.problem = ippp::qp5d().problem;
    out.x0 = ippp::Vector::Zero(5);
  } else if (*fixture == "convexqp") {
    const int dim = static_cast<int>(get_long(cfg, "dim", 5));
    out.problem =
        ippp::synthetic_build(ippp::SyntheticKind::ConvexQP, seed, dim).problem;
    out.x0 = ippp::Vector::Zero(dim);
  } else if (*fixture == "weaklyconvex") {
    const int dim = static_cast<int>(get_long(cfg, "dim", 2));
    out.problem =
        ippp::synthetic_build(ippp::SyntheticKind::WeaklyConvex, seed, dim)
            .problem;
    out.x0 = ippp::Vector::Zero(dim);
  } else if (*fixture == "mnpc") {
    const std::string* path = find(cfg, "dataset");
    if (!path)
      throw ConfigError(
          "mnpc fixture: missing key 'dataset' (path to a LIBSVM file)");
    std::ifstream in(*path);
    if (!in) throw ConfigError("cannot open dataset: " + *path);
    out.problem = build_mnpc_problem(cfg, ippp::parse_libsvm(in).data);
    out.x0 = ippp::Vector::Zero(out.problem.dim());
  } else if (*fixture == "mnpc_synthetic") {
    const int classes = static_cast<int>(get_long(cfg, "classes", 3));
    const int per_class = static_cast<int>(get_long(cfg, "per_class", 100));
    const int dim = static_cast<int>(get_long(cfg, "dim", 5));
    out.problem = build_mnpc_problem(
        cfg, ippp::synthetic_gaussian_dataset(classes, per_class, dim, seed));
    out.x0 = ippp::Vector::Zero(out.problem.dim());
  } else {
    throw ConfigError("unknown fixture '" + *fixture + "'");
  }

  // Declared curvature override for the objective.
  if (const std::string* rho0 = find(cfg, "rho0"))
    out.problem.f0.meta().weak_convexity = parse_double(*rho0, "rho0");

  if (const std::string* x0 = find(cfg, "x0")) {
    const std::vector<double> vals = parse_number_list(*x0, "x0");
    if (static_cast<int>(vals.size()) != out.problem.dim())
      throw ConfigError("x0 has " + std::to_string(vals.size()) +
                        " entries, instance dimension is " +
                        std::to_string(out.problem.dim()));
    out.x0 = Eigen::Map<const ippp::Vector>(vals.data(),
                                            static_cast<Eigen::Index>(vals.size()));
  }
  return out;
}

ResolvedRun resolve_run(const ConfigMap& cfg) {
  ResolvedProblem base = resolve_problem(cfg);

  ResolvedRun run;
  run.name = std::move(base.name);
  run.problem = std::move(base.problem);
  run.x0 = std::move(base.x0);

  const std::string kind = get_string(cfg, "schedule", "");
  if (kind.empty()) throw ConfigError("missing key 'schedule'");
  // 'auto' is only meaningful for the constant schedule; parse lazily so the
  // sentinel never reaches the numeric path.
  const std::string beta_text = get_string(cfg, "beta", "1");
  const bool beta_auto = beta_text == "auto";
  if (beta_auto && kind != "constant")
    throw ConfigError("beta = auto only applies to the constant schedule");
  const double beta = beta_auto ? 0.0 : parse_double(beta_text, "beta");
  const std::string* gamma = find(cfg, "gamma");

  auto need_rho = [&](const char* which) -> std::pair<double, double> {
    const std::string* rc = find(cfg, "rho_c");
    const auto rho0 = find(cfg, "rho0")
                          ? std::optional<double>(parse_double(
                                *find(cfg, "rho0"), "rho0"))
                          : ippp::problem_rho0(run.problem);
    const auto rho_c = rc ? std::optional<double>(parse_double(*rc, "rho_c"))
                          : ippp::problem_rho_c(run.problem);
    if (!rho0 || !rho_c)
      throw ConfigError(std::string(which) +
                        " schedule without gamma needs rho0 and rho_c (keys "
                        "or problem metadata)");
    return {*rho0, *rho_c};
  };

  if (kind == "convex") {
    if (!gamma) throw ConfigError("convex schedule requires key 'gamma'");
    run.schedule = ippp::Schedule::convex_sqrt(
        parse_double(*gamma, "gamma"), beta, ippp::problem_rho0(run.problem));
  } else if (kind == "nonconvex") {
    if (gamma) {
      run.schedule =
          ippp::Schedule::nonconvex_cbrt_gamma(beta, parse_double(*gamma, "gamma"));
    } else {
      auto [rho0, rho_c] = need_rho("nonconvex");
      run.schedule = ippp::Schedule::nonconvex_cbrt(beta, rho0, rho_c);
    }
  } else if (kind == "constant") {
    double beta_used = beta;
    if (beta_auto) {
      // Tuned feasible-start penalty from the complexity analysis.
      ippp::ConstantBudgetInputs in;
      const auto B = run.problem.f0.meta().value_grad_bound;
      auto [rho0, rho_c] = need_rho("constant");
      if (!B)
        throw ConfigError("beta = auto needs f0 value/gradient bound metadata");
      in.B_f0 = *B;
      in.G = run.problem.reg.value_bound();
      in.D = run.problem.reg.domain().diameter();
      in.rho0 = rho0;
      in.rho_c = rho_c;
      in.eps = get_double(cfg, "eps", 1e-3);
      beta_used = ippp::constant_budget(in).beta;
    }
    if (gamma) {
      run.schedule = ippp::Schedule::constant_feasible_gamma(
          beta_used, parse_double(*gamma, "gamma"));
    } else {
      auto [rho0, rho_c] = need_rho("constant");
      run.schedule = ippp::Schedule::constant_feasible(beta_used, rho0, rho_c);
    }
  } else {
    throw ConfigError("unknown schedule '" + kind +
                      "' (expected convex, nonconvex, or constant)");
  }

  const std::string option = get_string(cfg, "option", "I");
  if (option == "I") {
    run.options.option = ippp::RIndexOption::OptionI;
  } else if (option == "II") {
    run.options.option = ippp::RIndexOption::OptionII;
  } else {
    throw ConfigError("key 'option': expected I or II, got '" + option + "'");
  }

  run.options.eps = get_double(cfg, "eps", 1e-3);
  run.options.max_outer_iterations = get_long(cfg, "k_max", 100000);
  run.options.max_total_prox_steps = get_long(cfg, "max_prox_steps", -1);
  run.options.measure_time = get_flag(cfg, "timing", false);

  ippp::AdapConfig& inner = run.options.inner;
  inner.L_ini = get_double(cfg, "L_ini", inner.L_ini);
  inner.mu0 = get_double(cfg, "mu0", inner.mu0);
  inner.L_min = get_double(cfg, "L_min", inner.L_min);
  inner.gamma_inc = get_double(cfg, "gamma_inc", inner.gamma_inc);
  inner.gamma_dec = get_double(cfg, "gamma_dec", inner.gamma_dec);
  inner.gamma_sc = get_double(cfg, "gamma_sc", inner.gamma_sc);
  inner.theta_sc = get_double(cfg, "theta_sc", inner.theta_sc);
  inner.max_prox_steps =
      get_long(cfg, "inner_max_steps", inner.max_prox_steps);

  run.trace_path = get_string(cfg, "trace", "trace.csv");
  run.report_path = get_string(cfg, "report", "report.txt");
  return run;
}

CandidatePoint parse_point_file(const std::string& path) {
  ConfigMap cfg = parse_config_file(path);
  const std::string* x = find(cfg, "x");
  if (!x) throw ConfigError(path + ": missing key 'x'");

  auto to_vector = [](const std::vector<double>& vals) {
    return ippp::Vector(Eigen::Map<const ippp::Vector>(
        vals.data(), static_cast<Eigen::Index>(vals.size())));
  };

  CandidatePoint point;
  point.x = to_vector(parse_number_list(*x, "x"));
  if (const std::string* lam = find(cfg, "lambda"))
    point.lambda = to_vector(parse_number_list(*lam, "lambda"));
  if (const std::string* y = find(cfg, "y"))
    point.y = to_vector(parse_number_list(*y, "y"));
  return point;
}

}  // namespace ippp_cli
