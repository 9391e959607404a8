// Microbenchmarks for the hot paths: one proximal gradient step, a full
// inner solve, the active-set least-squares kernel, the classification
// oracle, and the stationarity certificate.

#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "ippp/adapapg.hpp"
#include "ippp/libsvm.hpp"
#include "ippp/mnpc.hpp"
#include "ippp/nnls.hpp"
#include "ippp/rng.hpp"
#include "ippp/stationarity.hpp"
#include "ippp/synthetic.hpp"

namespace {

using ippp::Matrix;
using ippp::Rng;
using ippp::Vector;

Matrix random_matrix(Rng& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.normal();
  return m;
}

// 0.5 x'Qx - b'x with Q = A'A + I, conditioned like a mid-size subproblem.
ippp::CompositeSubproblem quadratic_subproblem(int dim) {
  Rng rng(17);
  const Matrix A = random_matrix(rng, dim, dim);
  Matrix Q = A.transpose() * A / static_cast<double>(dim);
  Q += Matrix::Identity(dim, dim);
  Vector b(dim);
  for (int i = 0; i < dim; ++i) b[i] = rng.normal();
  ippp::CompositeSubproblem sub;
  sub.phi = ippp::SmoothOracle::fused([Q, b](const Vector& x) {
    Vector g = Q * x - b;
    return std::make_pair(0.5 * x.dot(g - b), std::move(g));
  });
  sub.r = ippp::Regularizer::indicator(ippp::DomainSet::ball(dim, 1.0));
  sub.strong_convexity = 1.0;
  return sub;
}

ippp::ConstrainedProblem classification_problem() {
  ippp::Dataset ds = ippp::synthetic_gaussian_dataset(3, 50, 5, 42);
  ds = ippp::lift_features(ds, 1.0);
  return ippp::mnpc_build(ds, {1.0, 1.0}, 0.3);
}

}  // namespace

static void BM_prox_grad_step(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const ippp::CompositeSubproblem sub = quadratic_subproblem(dim);
  const Vector w = Vector::Constant(dim, 0.3 / std::sqrt(double(dim)));
  for (auto _ : state) {
    ippp::ProxGradStep step = ippp::prox_grad_step(sub.phi, sub.r, w, 8.0);
    benchmark::DoNotOptimize(step.T);
  }
}
BENCHMARK(BM_prox_grad_step)->Arg(5)->Arg(20)->Arg(100);

static void BM_adapapg_quadratic(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const ippp::CompositeSubproblem sub = quadratic_subproblem(dim);
  ippp::AdapConfig cfg;
  cfg.eps_hat = 1e-6;
  const Vector x0 = Vector::Zero(dim);
  for (auto _ : state) {
    ippp::AdapResult res = ippp::adapapg_solve(sub, x0, cfg);
    benchmark::DoNotOptimize(res.x_hat);
  }
}
BENCHMARK(BM_adapapg_quadratic)->Arg(5)->Arg(20);

static void BM_nnls(benchmark::State& state) {
  Rng rng(5);
  const Matrix A = random_matrix(rng, 30, 10);
  Vector b(30);
  for (int i = 0; i < 30; ++i) b[i] = rng.normal();
  for (auto _ : state) {
    ippp::NnlsResult res = ippp::nnls(A, b);
    benchmark::DoNotOptimize(res.x);
  }
}
BENCHMARK(BM_nnls);

static void BM_mnpc_gradient(benchmark::State& state) {
  const ippp::ConstrainedProblem p = classification_problem();
  Rng rng(9);
  const Vector x = p.reg.domain().sample_uniform(rng);
  for (auto _ : state) {
    auto vg = p.f0.value_and_grad(x);
    benchmark::DoNotOptimize(vg.second);
  }
}
BENCHMARK(BM_mnpc_gradient);

static void BM_stationarity_measure(benchmark::State& state) {
  const ippp::ConstrainedProblem p = classification_problem();
  const Vector x = Vector::Zero(p.dim());
  for (auto _ : state) {
    const double m = ippp::stationarity_measure(p, x);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_stationarity_measure);

BENCHMARK_MAIN();
