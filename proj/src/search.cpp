#include "replica/search.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "replica/corners.hpp"
#include "replica/error.hpp"

namespace replica {
namespace {

void extend(const std::vector<double>& values, std::size_t from, int remaining, std::vector<double>& current,
            const DiscretePmf& pmf, std::set<StartVector>& out) {
   if (remaining == 0) {
      out.insert(prune(StartVector(current), pmf));
      return;
   }
   for (std::size_t i = from; i < values.size(); ++i) {
      current.push_back(values[i]);
      extend(values, i, remaining - 1, current, pmf, out);
      current.pop_back();
   }
}

}  // namespace

std::uint64_t candidate_count(std::size_t values, int machines) {
   // Multisets of size m-1 drawn from `values` items: C(values + m - 2, m - 1).
   if (machines <= 1) return 1;
   const std::uint64_t k = static_cast<std::uint64_t>(machines - 1);
   const std::uint64_t n = values + k - 1;
   long double c = 1.0L;
   for (std::uint64_t i = 1; i <= k; ++i) c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
   if (c > 1.8e19L) return UINT64_MAX;
   return static_cast<std::uint64_t>(c + 0.5L);
}

std::vector<StartVector> lattice_candidates(const DiscretePmf& pmf, int machines, std::uint64_t budget) {
   if (machines < 1) throw Error(ErrorKind::PreconditionViolated, "need at least one machine");
   const LatticeSet lattice = lattice_set(pmf, machines);
   const std::uint64_t count = candidate_count(lattice.values.size(), machines);
   if (count > budget)
      throw Error(ErrorKind::BudgetExceeded, std::to_string(count) + " candidate vectors exceed the budget of " +
                                                std::to_string(budget));
   std::set<StartVector> unique;
   std::vector<double> current{0.0};
   extend(lattice.values, 0, machines - 1, current, pmf, unique);
   return {unique.begin(), unique.end()};
}

SearchResult exhaustive_search(const DiscretePmf& pmf, int machines, CostWeights w, std::uint64_t budget) {
   SearchResult best;
   bool have = false;
   for (const StartVector& v : lattice_candidates(pmf, machines, budget)) {
      PolicyEvaluation e = eval_single(pmf, v);
      double j = cost(e, w);
      if (!have || j < best.cost - kCostTieTol) {
         best = SearchResult{v, j, e.expected_T, e.expected_C};
         have = true;
      }
   }
   return best;
}

StartVector greedy_lookahead(const DiscretePmf& pmf, int machines, int k, const PolicyCost& cost) {
   if (machines < 1 || k < 1) throw Error(ErrorKind::PreconditionViolated, "need machines >= 1 and k >= 1");
   const double unused = pmf.max_time();
   std::vector<double> t{0.0};
   while (static_cast<int>(t.size()) < machines) {
      std::vector<double> corners = corner_points(t, pmf);
      std::vector<double> options;
      for (double u : corners) {
         if (u >= t.back() - kTimeEps && static_cast<int>(options.size()) < k) options.push_back(u);
      }
      // Leaving the machine unused is the last option so ties favor earlier starts.
      options.push_back(unused);

      double best_cost = 0.0;
      double best_time = unused;
      bool have = false;
      for (double u : options) {
         std::vector<double> next(t);
         next.push_back(u);
         double j = cost(StartVector(std::move(next)));
         if (!have || j < best_cost - kCostTieTol) {
            best_cost = j;
            best_time = u;
            have = true;
         }
      }
      if (best_time >= unused - kTimeEps) break;
      t.push_back(best_time);
   }
   t.resize(static_cast<std::size_t>(machines), unused);
   return StartVector(std::move(t));
}

StartVector heuristic_k(const DiscretePmf& pmf, int machines, int k, CostWeights w) {
   return greedy_lookahead(pmf, machines, k, [&](const StartVector& v) { return cost(eval_single(pmf, v), w); });
}

Frontier frontier(const DiscretePmf& pmf, int machines, std::uint64_t budget) {
   std::vector<FrontierPoint> all;
   for (const StartVector& v : lattice_candidates(pmf, machines, budget)) {
      PolicyEvaluation e = eval_single(pmf, v);
      all.push_back({e.expected_C, e.expected_T, v});
   }
   // Candidates arrive in lexicographic order; stable_sort keeps the smallest
   // witness first among identical (E[C], E[T]) pairs.
   std::stable_sort(all.begin(), all.end(), [](const FrontierPoint& a, const FrontierPoint& b) {
      if (a.expected_C != b.expected_C) return a.expected_C < b.expected_C;
      return a.expected_T < b.expected_T;
   });
   Frontier f;
   for (FrontierPoint& p : all) {
      if (!f.points.empty() && p.expected_T >= f.points.back().expected_T - kCostTieTol) continue;
      // Same E[C] up to tolerance but lower E[T]: the earlier point is dominated.
      while (!f.points.empty() && p.expected_C - f.points.back().expected_C <= kCostTieTol) f.points.pop_back();
      f.points.push_back(std::move(p));
   }
   return f;
}

std::string frontier_csv(const Frontier& f) {
   std::string out = "expected_C,expected_T,policy\n";
   char buf[64];
   for (const FrontierPoint& p : f.points) {
      std::snprintf(buf, sizeof buf, "%.9g,%.9g,", p.expected_C, p.expected_T);
      out += buf;
      out += '"' + format_times(p.policy.times()) + "\"\n";
   }
   return out;
}

}  // namespace replica
