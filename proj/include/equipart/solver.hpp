#pragma once

// Best-effort numerical search for eps-approximate equipartitions of
// point-cloud masses. A NotFound result only means no arrangement was found
// within the budget; it says nothing about existence.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "equipart/core.hpp"

namespace equipart {

struct SolverConfig {
  double eps = 0.02;          ///< per-orthant tolerance, 0 < eps < 2^-k
  int restarts = 16;
  int max_iters = 6000;       ///< simplex iterations per restart, over all annealing stages
  std::uint64_t seed = 0;
  double reflect = 1.0;
  double expand = 2.0;
  double contract = 0.5;
  double shrink = 0.5;
  double time_budget = 120.0;  ///< seconds; exceeding it ends the search as NotFound
  unsigned threads = 0;        ///< 0 = hardware concurrency
};

enum class SolveStatus { Found, NotFound };

struct SolveResult {
  SolveStatus status = SolveStatus::NotFound;
  std::optional<Arrangement<double>> arrangement;
  double residual = 0;            ///< max |test-vector component| of the reported arrangement
  std::uint64_t evaluations = 0;  ///< objective evaluations in restarts 0..restart_index (all, if NotFound)
  int restart_index = -1;         ///< succeeding restart, or the best one if NotFound
};

/// Sum of squared test-vector components (closed orthants). Point clouds only.
double objective(const std::vector<Mass<double>>& masses, const Arrangement<double>& arr);

/// Max absolute test-vector component.
double residual(const std::vector<Mass<double>>& masses, const Arrangement<double>& arr);

/// Multi-start derivative-free search with k hyperplanes. Deterministic in
/// (masses, k, config), independent of the thread count.
SolveResult solve(const std::vector<Mass<double>>& masses, std::size_t k, const SolverConfig& config);

/// solve with k = 1 for j masses in R^j.
SolveResult ham_sandwich(const std::vector<Mass<double>>& masses, const SolverConfig& config);

}  // namespace equipart
