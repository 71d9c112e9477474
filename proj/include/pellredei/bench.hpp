#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "pellredei/bigint.hpp"

namespace pellredei {

/// Ways of computing (x_n, y_n) from the fundamental solution.
enum class BenchStrategy { LinearFold, HyperbolaPower, RedeiQ2n };

inline constexpr std::array<BenchStrategy, 3> kBenchStrategies = {
    BenchStrategy::LinearFold, BenchStrategy::HyperbolaPower, BenchStrategy::RedeiQ2n};

[[nodiscard]] std::string_view to_string(BenchStrategy s);

struct BenchTiming {
  BenchStrategy strategy;
  std::uint64_t median_ns = 0;
  BigInt x;
  BigInt y;
};

struct BenchReport {
  BigInt d;
  std::uint64_t n = 1;
  unsigned repetitions = 1;
  std::array<BenchTiming, 3> timings;
  /// All strategies returned bit-identical (x, y).
  bool agree = false;
};

/// Times each strategy on the n-th solution, `repetitions` runs each in
/// sequence on a monotonic clock, and keeps the median.
/// Throws PerfectSquareError for square d and DomainError for n == 0 or
/// repetitions == 0.
[[nodiscard]] BenchReport run_bench(const BigInt& d, std::uint64_t n, unsigned repetitions);

}  // namespace pellredei
