#pragma once

#include <cstdint>
#include <vector>

#include "replica/pmf.hpp"
#include "replica/policy.hpp"

namespace replica {

/// Exact evaluation refuses instances with more joint outcomes than this.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct PolicyEvaluation {
   double expected_T = 0.0;
   double expected_C = 0.0;
   DiscretePmf t_pmf;
   StartVector policy;
};

/// Weight on completion time in J = lambda E[T] + (1 - lambda) E[C].
class CostWeights {
 public:
   explicit CostWeights(double lambda);
   double lambda() const noexcept { return lambda_; }

 private:
   double lambda_;
};

double cost(double expected_T, double expected_C, CostWeights w);
double cost(const PolicyEvaluation& e, CostWeights w);

/// Exact E[T], E[C] and the law of T for one task under start vector v, by
/// enumerating all size()^m joint outcomes of the machines' run times.
/// Throws BudgetExceeded when that count is above `budget`.
PolicyEvaluation eval_single(const DiscretePmf& pmf, const StartVector& v,
                             std::uint64_t budget = kDefaultEnumerationBudget);

struct TraceOutcome {
   double T = 0.0;
   double C_total = 0.0;
};

/// Deterministic replay of one realization. starts[i][j] is when copy j of
/// task i is scheduled and realized[i][j] how long it would run. A copy
/// scheduled at or after its task's completion never runs. C_total is the
/// un-normalized sum of machine time over all tasks.
TraceOutcome eval_trace(const std::vector<std::vector<double>>& starts,
                        const std::vector<std::vector<double>>& realized);

}  // namespace replica
