#include "modinv/crt.hpp"
#include "modinv/dayan.hpp"
#include "modinv/modmath.hpp"
#include "modinv/oracle.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace modinv;

namespace {

struct Task {
  Int p;
  Int q;
  Int a;
};

// Co-prime tasks with p uniform in [3, max_p].
std::vector<Task> make_tasks(std::int64_t max_p, std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> pick_p(3, max_p);
  std::vector<Task> tasks;
  while (tasks.size() < n) {
    const std::int64_t p = pick_p(rng);
    const std::int64_t q = std::uniform_int_distribution<std::int64_t>(2, p - 1)(rng);
    if (gcd(p, q) != 1) continue;
    tasks.push_back({p, q, std::uniform_int_distribution<std::int64_t>(0, p - 1)(rng)});
  }
  return tasks;
}

void BM_Euclid(benchmark::State& state) {
  const auto tasks = make_tasks(state.range(0), 256);
  std::size_t divisions = 0;
  std::size_t k = 0;
  for (auto _ : state) {
    const Task& t = tasks[k++ % tasks.size()];
    auto r = oracle::euclid_inverse_counted(t.q, t.p);
    Int x = floor_mod(Int(t.a * *r.inverse), t.p);
    benchmark::DoNotOptimize(x);
    divisions += r.steps.divisions;
  }
  state.counters["divisions"] = benchmark::Counter(static_cast<double>(divisions), benchmark::Counter::kAvgIterations);
}

void BM_Dayan(benchmark::State& state, SignStrategy strategy) {
  const auto tasks = make_tasks(state.range(0), 256);
  std::size_t divisions = 0;
  std::size_t k = 0;
  for (auto _ : state) {
    const Task& t = tasks[k++ % tasks.size()];
    const DayanTrace trace = run_trace(t.p, t.q, t.a, strategy, TraceOptions{.complete_remainders = false});
    Int x = ext_inverse_sum_f(trace);
    benchmark::DoNotOptimize(x);
    divisions += trace.sum_steps();
  }
  state.counters["divisions"] = benchmark::Counter(static_cast<double>(divisions), benchmark::Counter::kAvgIterations);
}

void BM_ModInverse(benchmark::State& state) {
  const auto tasks = make_tasks(state.range(0), 256);
  std::size_t k = 0;
  for (auto _ : state) {
    const Task& t = tasks[k++ % tasks.size()];
    benchmark::DoNotOptimize(mod_inverse(t.q, t.p));
  }
}

void BM_SolveGeneral(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(2, 1000);
  std::vector<Congruence> sys;
  for (std::int64_t j = 0; j < state.range(0); ++j) {
    const int m = pick(rng);
    sys.emplace_back(0, m);  // always solvable
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve_general(sys));
}

}  // namespace

BENCHMARK(BM_Euclid)->Arg(1000)->Arg(1'000'000)->Arg(1'000'000'000);
BENCHMARK_CAPTURE(BM_Dayan, all_plus, SignStrategy::all_plus())->Arg(1000)->Arg(1'000'000)->Arg(1'000'000'000);
BENCHMARK_CAPTURE(BM_Dayan, all_minus, SignStrategy::all_minus())->Arg(1000)->Arg(1'000'000)->Arg(1'000'000'000);
BENCHMARK_CAPTURE(BM_Dayan, least_abs, SignStrategy::least_absolute())->Arg(1000)->Arg(1'000'000)->Arg(1'000'000'000);
BENCHMARK(BM_ModInverse)->Arg(1000)->Arg(1'000'000'000);
BENCHMARK(BM_SolveGeneral)->Arg(4)->Arg(64);
BENCHMARK_MAIN();
