#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "replica/eval.hpp"

namespace replica {

/// Exhaustive search refuses lattices with more candidate vectors than this.
inline constexpr std::uint64_t kDefaultCandidateBudget = 1'000'000;
/// Cost differences at or below this are ties.
inline constexpr double kCostTieTol = 1e-9;

struct SearchResult {
   StartVector policy;
   double cost = 0.0;
   double expected_T = 0.0;
   double expected_C = 0.0;
};

/// Number of nondecreasing m-vectors with t_1 = 0 over a set of `values` times.
std::uint64_t candidate_count(std::size_t values, int machines);

/// Every distinct pruned, nondecreasing vector with t_1 = 0 and entries in the
/// lattice, in lexicographic order.
std::vector<StartVector> lattice_candidates(const DiscretePmf& pmf, int machines,
                                            std::uint64_t budget = kDefaultCandidateBudget);

/// Optimal policy over the lattice candidates. Among cost ties the
/// lexicographically smallest vector wins.
SearchResult exhaustive_search(const DiscretePmf& pmf, int machines, CostWeights w,
                               std::uint64_t budget = kDefaultCandidateBudget);

using PolicyCost = std::function<double(const StartVector&)>;

/// Greedy k-step lookahead. Starting from [0], each further machine is either
/// left unused or started at one of the first k corner points not earlier
/// than the previous start, whichever minimizes `cost`. Once leaving a machine
/// unused wins, every later machine is unused too. The result always has
/// `machines` entries, unused ones set to max_time.
StartVector greedy_lookahead(const DiscretePmf& pmf, int machines, int k, const PolicyCost& cost);

/// greedy_lookahead with the exact single-task cost.
StartVector heuristic_k(const DiscretePmf& pmf, int machines, int k, CostWeights w);

struct FrontierPoint {
   double expected_C = 0.0;
   double expected_T = 0.0;
   StartVector policy;
};

/// Pareto-minimal (E[C], E[T]) points, E[C] ascending and E[T] strictly descending.
struct Frontier {
   std::vector<FrontierPoint> points;
};

Frontier frontier(const DiscretePmf& pmf, int machines, std::uint64_t budget = kDefaultCandidateBudget);

/// Header `expected_C,expected_T,policy`, one row per point, policy quoted.
std::string frontier_csv(const Frontier& f);

}  // namespace replica
