#pragma once

#include "replica/bimodal.hpp"
#include "replica/eval.hpp"

namespace replica {

/// n tasks, each following the same single-task start vector independently.
struct MultiTaskEvaluation {
   int tasks = 1;
   double expected_T_max = 0.0;
   /// Machine time averaged over tasks.
   double expected_C = 0.0;
   /// tasks * expected_C.
   double expected_C_total = 0.0;
   DiscretePmf per_task_T_pmf;
};

/// E[max of n i.i.d. draws] = sum_w w (F(w)^n - F(w-)^n).
double expected_max_iid(const DiscretePmf& pmf, int n);

MultiTaskEvaluation eval_replicated(const DiscretePmf& pmf, const StartVector& v, int tasks);

/// greedy_lookahead on J = lambda E[max_i T_i] + (1 - lambda) E[C]. Each entry
/// of the result launches one more copy of every task still running.
StartVector heuristic_multi(const DiscretePmf& pmf, int machines, int tasks, int k, CostWeights w);

struct JointMetrics {
   double expected_T = 0.0;
   /// Per-task average machine time.
   double expected_C = 0.0;
   double cost = 0.0;
};

/// Two tasks under a bimodal law. `separate` runs each task alone on [0, slow];
/// `joint` starts both at 0 and, when one task finishes at `fast` while the
/// other is still running, gives the straggler one extra copy at `fast`.
/// Both are computed by enumerating every joint outcome.
struct SeparationReport {
   JointMetrics separate;
   JointMetrics joint;
   /// (2p-1)/(4p-1) < fast/slow < (2p-1)/(3p-1)
   bool window = false;
   bool dominates_T = false;
   bool dominates_C = false;
   /// The closed forms printed alongside the construction, for comparison only.
   Moments published_separate;
   Moments published_joint;
};

/// Requires 2 fast < slow (PreconditionViolated otherwise).
SeparationReport separation_demo(const BimodalParams& b, CostWeights w);

bool in_separation_window(const BimodalParams& b);

}  // namespace replica
