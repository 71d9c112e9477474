#include "pellredei/bench.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

#include "pellredei/errors.hpp"
#include "pellredei/hyperbola.hpp"
#include "pellredei/solver.hpp"

namespace pellredei {

std::string_view to_string(BenchStrategy s) {
  switch (s) {
    case BenchStrategy::LinearFold: return "fold";
    case BenchStrategy::HyperbolaPower: return "power";
    case BenchStrategy::RedeiQ2n: return "redei";
  }
  return "?";
}

namespace {

PellSolution linear_fold(const PellSolver& solver, std::uint64_t n) {
  const PellSolution& m = solver.minimal();
  const HyperbolaPoint base(m.d, m.x, m.y);
  HyperbolaPoint acc = base;
  for (std::uint64_t i = 1; i < n; ++i) acc = h_mul(acc, base);
  return {m.d, n, acc.x().num(), acc.y().num()};
}

PellSolution compute(const PellSolver& solver, BenchStrategy s, std::uint64_t n) {
  switch (s) {
    case BenchStrategy::LinearFold: return linear_fold(solver, n);
    case BenchStrategy::HyperbolaPower: return solver.nth(n, SolutionStrategy::HyperbolaPower);
    case BenchStrategy::RedeiQ2n: return solver.nth(n, SolutionStrategy::RedeiQ2n);
  }
  throw DomainError("unknown bench strategy");
}

}  // namespace

BenchReport run_bench(const BigInt& d, std::uint64_t n, unsigned repetitions) {
  if (n == 0) throw DomainError("n must be at least 1");
  if (repetitions == 0) throw DomainError("repetitions must be at least 1");
  const PellSolver solver(d);

  BenchReport report{d, n, repetitions, {}, true};
  for (std::size_t i = 0; i < kBenchStrategies.size(); ++i) {
    const BenchStrategy s = kBenchStrategies[i];
    std::vector<std::uint64_t> samples;
    samples.reserve(repetitions);
    PellSolution result;
    for (unsigned r = 0; r < repetitions; ++r) {
      const auto start = std::chrono::steady_clock::now();
      result = compute(solver, s, n);
      const auto stop = std::chrono::steady_clock::now();
      samples.push_back(static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
    }
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
    report.timings[i] = {s, samples[samples.size() / 2], std::move(result.x), std::move(result.y)};
  }
  for (const auto& t : report.timings) {
    if (t.x != report.timings[0].x || t.y != report.timings[0].y) report.agree = false;
  }
  return report;
}

}  // namespace pellredei
