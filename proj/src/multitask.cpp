#include "replica/multitask.hpp"

#include <cmath>

#include "replica/error.hpp"
#include "replica/search.hpp"

namespace replica {

double expected_max_iid(const DiscretePmf& pmf, int n) {
   if (n < 1) throw Error(ErrorKind::PreconditionViolated, "task count must be at least 1");
   double total = 0.0;
   double below = 0.0;
   double cum = 0.0;
   const auto support = pmf.support();
   const auto probs = pmf.probs();
   for (std::size_t i = 0; i < pmf.size(); ++i) {
      cum = (i + 1 == pmf.size()) ? 1.0 : cum + probs[i];
      const double at = std::pow(cum, n);
      total += support[i] * (at - below);
      below = at;
   }
   return total;
}

MultiTaskEvaluation eval_replicated(const DiscretePmf& pmf, const StartVector& v, int tasks) {
   if (tasks < 1) throw Error(ErrorKind::PreconditionViolated, "task count must be at least 1");
   PolicyEvaluation single = eval_single(pmf, v);
   MultiTaskEvaluation out{tasks, 0.0, single.expected_C, tasks * single.expected_C, single.t_pmf};
   // max of one draw is the draw itself; reuse the exact mean.
   out.expected_T_max = tasks == 1 ? single.expected_T : expected_max_iid(single.t_pmf, tasks);
   return out;
}

StartVector heuristic_multi(const DiscretePmf& pmf, int machines, int tasks, int k, CostWeights w) {
   if (tasks < 1) throw Error(ErrorKind::PreconditionViolated, "task count must be at least 1");
   return greedy_lookahead(pmf, machines, k, [&](const StartVector& v) {
      MultiTaskEvaluation e = eval_replicated(pmf, v, tasks);
      return cost(e.expected_T_max, e.expected_C, w);
   });
}

bool in_separation_window(const BimodalParams& b) {
   const double p = b.p_fast();
   const double lo_den = 4.0 * p - 1.0;
   const double hi_den = 3.0 * p - 1.0;
   if (lo_den <= 0.0 || hi_den <= 0.0) return false;
   const double r = b.ratio();
   return (2.0 * p - 1.0) / lo_den < r && r < (2.0 * p - 1.0) / hi_den;
}

namespace {

struct Draw {
   double value;
   double prob;
};

}  // namespace

SeparationReport separation_demo(const BimodalParams& b, CostWeights w) {
   const double a1 = b.fast(), a2 = b.slow(), p = b.p_fast(), q = b.p_slow();
   if (!(2.0 * a1 < a2)) throw Error(ErrorKind::PreconditionViolated, "separation example needs 2 fast < slow");

   const std::array<Draw, 2> atoms{Draw{a1, p}, Draw{a2, q}};
   // Per task: copy 0 at 0, copy 1 at slow, copy 2 at fast (joint policy only).
   constexpr int kCopies = 3;
   constexpr int kDraws = 2 * kCopies;
   double sep_T = 0.0, sep_C = 0.0, joint_T = 0.0, joint_C = 0.0;
   for (int mask = 0; mask < (1 << kDraws); ++mask) {
      double prob = 1.0;
      std::array<std::array<double, kCopies>, 2> x{};
      for (int d = 0; d < kDraws; ++d) {
         const Draw& a = atoms[(mask >> d) & 1];
         prob *= a.prob;
         x[d / kCopies][d % kCopies] = a.value;
      }

      const TraceOutcome separate = eval_trace({{0.0, a2}, {0.0, a2}}, {{x[0][0], x[0][1]}, {x[1][0], x[1][1]}});
      sep_T += prob * separate.T;
      sep_C += prob * separate.C_total / 2.0;

      // First-pass completions decide whether the extra copy is launched.
      std::array<double, 2> done{std::min(x[0][0], a2 + x[0][1]), std::min(x[1][0], a2 + x[1][1])};
      std::vector<std::vector<double>> starts{{0.0, a2}, {0.0, a2}};
      std::vector<std::vector<double>> run{{x[0][0], x[0][1]}, {x[1][0], x[1][1]}};
      for (int i = 0; i < 2; ++i) {
         const int other = 1 - i;
         if (std::abs(done[other] - a1) <= kTimeEps && done[i] > a1 + kTimeEps) {
            starts[i].push_back(a1);
            run[i].push_back(x[i][2]);
         }
      }
      const TraceOutcome joint = eval_trace(starts, run);
      joint_T += prob * joint.T;
      joint_C += prob * joint.C_total / 2.0;
   }

   SeparationReport r;
   r.separate = {sep_T, sep_C, cost(sep_T, sep_C, w)};
   r.joint = {joint_T, joint_C, cost(joint_T, joint_C, w)};
   r.window = in_separation_window(b);
   r.dominates_T = joint_T < sep_T - kCostTieTol;
   r.dominates_C = joint_C < sep_C - kCostTieTol;
   r.published_separate = {p * p * a1 + (1.0 - p * p) * a2,
                           2.0 * p * p * a1 + 2.0 * p * q * (a1 + a2) + 2.0 * (1.0 - p * p) * a2};
   r.published_joint = {p * p * a1 + 2.0 * p * p * q * (2.0 * a1) + q * q * (2.0 * p + 1.0) * a2,
                        p * p * (2.0 * a1) + 2.0 * p * p * q * (3.0 * a1) + q * q * (2.0 * p + 1.0) * (2.0 * a2)};
   return r;
}

}  // namespace replica
