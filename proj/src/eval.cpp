#include "replica/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "replica/error.hpp"

namespace replica {
namespace {

/// Neumaier compensated sum.
class CompensatedSum {
 public:
   void add(double x) {
      double t = sum_ + x;
      if (std::abs(sum_) >= std::abs(x))
         comp_ += (sum_ - t) + x;
      else
         comp_ += (x - t) + sum_;
      sum_ = t;
   }
   double value() const { return sum_ + comp_; }

 private:
   double sum_ = 0.0;
   double comp_ = 0.0;
};

std::uint64_t outcome_count(std::size_t atoms, std::size_t machines, std::uint64_t cap) {
   std::uint64_t n = 1;
   for (std::size_t j = 0; j < machines; ++j) {
      if (n > cap / atoms) return cap + 1;
      n *= atoms;
   }
   return n;
}

}  // namespace

CostWeights::CostWeights(double lambda) : lambda_(lambda) {
   if (!(lambda >= 0.0 && lambda <= 1.0))
      throw Error(ErrorKind::PreconditionViolated, "lambda must lie in [0, 1], got " + std::to_string(lambda));
}

double cost(double expected_T, double expected_C, CostWeights w) {
   return w.lambda() * expected_T + (1.0 - w.lambda()) * expected_C;
}

double cost(const PolicyEvaluation& e, CostWeights w) { return cost(e.expected_T, e.expected_C, w); }

PolicyEvaluation eval_single(const DiscretePmf& pmf, const StartVector& v, std::uint64_t budget) {
   const std::size_t m = v.size();
   const std::size_t l = pmf.size();
   if (m == 0) throw Error(ErrorKind::PreconditionViolated, "start vector is empty");
   for (double t : v.times()) {
      if (t < -kTimeEps || t > pmf.max_time() + kTimeEps)
         throw Error(ErrorKind::TimeOutOfRange, "start time " + std::to_string(t) + " outside [0, max_time]");
   }
   const std::uint64_t outcomes = outcome_count(l, m, budget);
   if (outcomes > budget)
      throw Error(ErrorKind::BudgetExceeded, std::to_string(l) + "^" + std::to_string(m) +
                                                " outcomes exceed the enumeration budget of " + std::to_string(budget));

   const auto support = pmf.support();
   const auto probs = pmf.probs();
   const auto starts = v.times();

   // Every completion time is some start + some atom.
   std::vector<double> grid;
   grid.reserve(m * l);
   for (double t : starts)
      for (double a : support) grid.push_back(t + a);
   std::sort(grid.begin(), grid.end());
   grid.erase(std::unique(grid.begin(), grid.end(), [](double a, double b) { return b - a <= kTimeEps; }), grid.end());
   std::vector<CompensatedSum> mass(grid.size());

   CompensatedSum sum_T;
   CompensatedSum sum_C;
   std::vector<std::size_t> idx(m, 0);
   // Prefix products of probabilities along the odometer.
   std::vector<double> prefix(m + 1, 1.0);
   for (std::size_t j = 0; j < m; ++j) prefix[j + 1] = prefix[j] * probs[0];

   for (std::uint64_t n = 0; n < outcomes; ++n) {
      double T = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < m; ++j) T = std::min(T, starts[j] + support[idx[j]]);
      double C = 0.0;
      for (double t : starts) C += std::max(0.0, T - t);
      const double p = prefix[m];
      sum_T.add(p * T);
      sum_C.add(p * C);
      auto slot = std::lower_bound(grid.begin(), grid.end(), T - kTimeEps);
      mass[static_cast<std::size_t>(slot - grid.begin())].add(p);

      // Advance the odometer, last machine fastest.
      std::size_t j = m;
      while (j > 0) {
         --j;
         if (++idx[j] < l) break;
         idx[j] = 0;
      }
      for (std::size_t k = j; k < m; ++k) prefix[k + 1] = prefix[k] * probs[idx[k]];
   }

   std::vector<double> t_support;
   std::vector<double> t_probs;
   for (std::size_t i = 0; i < grid.size(); ++i) {
      double p = mass[i].value();
      if (p > 0.0) {
         t_support.push_back(grid[i]);
         t_probs.push_back(p);
      }
   }
   return PolicyEvaluation{sum_T.value(), sum_C.value(), DiscretePmf(std::move(t_support), std::move(t_probs)), v};
}

TraceOutcome eval_trace(const std::vector<std::vector<double>>& starts,
                        const std::vector<std::vector<double>>& realized) {
   if (starts.size() != realized.size() || starts.empty())
      throw Error(ErrorKind::ShapeMismatch, "starts and realized must list the same, nonzero number of tasks");
   TraceOutcome out;
   for (std::size_t i = 0; i < starts.size(); ++i) {
      const auto& s = starts[i];
      const auto& x = realized[i];
      if (s.size() != x.size() || s.empty())
         throw Error(ErrorKind::ShapeMismatch, "task " + std::to_string(i) + " has mismatched copy lists");
      // Copies scheduled after T_i end later than T_i, so the plain minimum is T_i.
      double Ti = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < s.size(); ++j) Ti = std::min(Ti, s[j] + x[j]);
      for (double t : s) out.C_total += std::max(0.0, Ti - t);
      out.T = std::max(out.T, Ti);
   }
   return out;
}

}  // namespace replica
