#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "replica/error.hpp"
#include "replica/search.hpp"

using namespace replica;

namespace {

const DiscretePmf kMotivating({2, 7}, {0.9, 0.1});
const DiscretePmf kThreePoint({4, 8, 20}, {0.6, 0.3, 0.1});

std::vector<double> as_vec(const StartVector& v) { return {v.times().begin(), v.times().end()}; }

void check_pareto(const Frontier& f) {
   for (std::size_t i = 1; i < f.points.size(); ++i) {
      CHECK(f.points[i].expected_C > f.points[i - 1].expected_C + kCostTieTol);
      CHECK(f.points[i].expected_T < f.points[i - 1].expected_T - kCostTieTol);
   }
}

}  // namespace

TEST_CASE("candidate_count") {
   CHECK(candidate_count(4, 1) == 1);
   CHECK(candidate_count(4, 2) == 4);
   CHECK(candidate_count(4, 3) == 10);
   CHECK(candidate_count(6, 3) == 21);
}

TEST_CASE("exhaustive_search: motivating example") {
   SearchResult half = exhaustive_search(kMotivating, 2, CostWeights(0.5));
   CHECK(as_vec(half.policy) == std::vector<double>{0, 2});
   CHECK(std::abs(half.cost - 2.345) < 1e-9);

   // Late replication lowers machine time below the single machine's 2.5.
   SearchResult machine_time = exhaustive_search(kMotivating, 2, CostWeights(0.0));
   CHECK(as_vec(machine_time.policy) == std::vector<double>{0, 2});
   CHECK(std::abs(machine_time.cost - 2.46) < 1e-9);

   SearchResult latency = exhaustive_search(kMotivating, 2, CostWeights(1.0));
   CHECK(as_vec(latency.policy) == std::vector<double>{0, 0});
   CHECK(std::abs(latency.cost - 2.05) < 1e-9);

   SearchResult single = exhaustive_search(kMotivating, 1, CostWeights(0.5));
   CHECK(as_vec(single.policy) == std::vector<double>{0});
   CHECK(std::abs(single.cost - 2.5) < 1e-9);
}

TEST_CASE("exhaustive_search: bimodal optimum uses 0, fast, or slow") {
   for (double a1 : {1.0, 2.0, 3.5})
      for (double p1 : {0.3, 0.6, 0.9})
         for (double lambda : {0.0, 0.3, 0.7, 1.0}) {
            DiscretePmf pmf = DiscretePmf::bimodal(a1, 10.0, p1);
            double t2 = exhaustive_search(pmf, 2, CostWeights(lambda)).policy[1];
            bool ok = t2 == 0.0 || std::abs(t2 - a1) < kTimeEps || t2 == 10.0;
            CHECK(ok);
         }
}

TEST_CASE("exhaustive_search: no fine-grid policy beats the lattice optimum") {
   std::mt19937_64 rng(123);
   for (int trial = 0; trial < 6; ++trial) {
      DiscretePmf pmf = oracle::random_pmf(rng, 2 + trial % 2, 10);
      for (double lambda : {0.0, 0.5, 1.0}) {
         double lattice = exhaustive_search(pmf, 2, CostWeights(lambda)).cost;
         CHECK(oracle::grid_min_cost(pmf, 2, lambda, 400) >= lattice - 1e-6);
      }
   }
}

TEST_CASE("exhaustive_search: budget") {
   try {
      exhaustive_search(kThreePoint, 3, CostWeights(0.5), 5);
      FAIL("expected BudgetExceeded");
   } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BudgetExceeded);
   }
}

TEST_CASE("heuristic_k: worked examples") {
   CHECK(as_vec(heuristic_k(kMotivating, 2, 2, CostWeights(0.5))) == std::vector<double>{0, 2});
   CHECK(as_vec(heuristic_k(kMotivating, 2, 1, CostWeights(0.5))) == std::vector<double>{0, 7});
   CHECK(as_vec(heuristic_k(kMotivating, 1, 3, CostWeights(0.5))) == std::vector<double>{0});
   CHECK(as_vec(heuristic_k(kThreePoint, 1, 1, CostWeights(0.0))) == std::vector<double>{0});
   // Once a machine is left unused, so is every later one.
   std::vector<double> v = as_vec(heuristic_k(kMotivating, 4, 1, CostWeights(0.5)));
   CHECK(v == std::vector<double>{0, 7, 7, 7});
   CHECK_THROWS_AS(heuristic_k(kMotivating, 2, 0, CostWeights(0.5)), Error);
}

TEST_CASE("heuristic_k never beats the exhaustive optimum") {
   std::mt19937_64 rng(55);
   for (int trial = 0; trial < 30; ++trial) {
      DiscretePmf pmf = oracle::random_pmf(rng, 2 + trial % 2, 15);
      const int m = 2 + trial % 2;
      for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
         CostWeights w(lambda);
         double best = exhaustive_search(pmf, m, w).cost;
         for (int k = 1; k <= 3; ++k) CHECK(cost(eval_single(pmf, heuristic_k(pmf, m, k, w)), w) >= best - 1e-9);
      }
   }
}

TEST_CASE("frontier: motivating example") {
   Frontier f = frontier(kMotivating, 2);
   REQUIRE(f.points.size() == 2);
   CHECK(as_vec(f.points[0].policy) == std::vector<double>{0, 2});
   CHECK(std::abs(f.points[0].expected_C - 2.46) < 1e-9);
   CHECK(std::abs(f.points[0].expected_T - 2.23) < 1e-9);
   CHECK(as_vec(f.points[1].policy) == std::vector<double>{0, 0});
   CHECK(std::abs(f.points[1].expected_C - 4.10) < 1e-9);

   Frontier single = frontier(kThreePoint, 1);
   REQUIRE(single.points.size() == 1);
   CHECK(std::abs(single.points[0].expected_T - 6.8) < 1e-9);
   CHECK(std::abs(single.points[0].expected_C - 6.8) < 1e-9);
}

TEST_CASE("frontier: three-point endpoints") {
   Frontier f = frontier(kThreePoint, 3);
   check_pareto(f);
   REQUIRE(f.points.size() >= 2);
   // [0,8,20] matches a single machine's E[C] = 6.8 with lower E[T].
   CHECK(as_vec(f.points.front().policy) == std::vector<double>{0, 8, 20});
   CHECK(std::abs(f.points.front().expected_C - 6.8) < 1e-9);
   CHECK(std::abs(f.points.front().expected_T - 6.2) < 1e-9);
   CHECK(as_vec(f.points.back().policy) == std::vector<double>{0, 0, 0});
}

TEST_CASE("frontier: contains every scalarized optimum") {
   std::mt19937_64 rng(77);
   for (int trial = 0; trial < 15; ++trial) {
      DiscretePmf pmf = oracle::random_pmf(rng, 2 + trial % 2, 12);
      const int m = 2 + trial % 2;
      Frontier f = frontier(pmf, m);
      check_pareto(f);
      CHECK(frontier(pmf, m).points.size() == f.points.size());
      for (int i = 0; i <= 10; ++i) {
         SearchResult r = exhaustive_search(pmf, m, CostWeights(i / 10.0));
         bool on = std::any_of(f.points.begin(), f.points.end(), [&](const FrontierPoint& p) {
            return std::abs(p.expected_C - r.expected_C) <= 1e-9 && std::abs(p.expected_T - r.expected_T) <= 1e-9;
         });
         CHECK(on);
      }
   }
}

TEST_CASE("frontier_csv") {
   std::string csv = frontier_csv(frontier(kMotivating, 2));
   CHECK(csv == "expected_C,expected_T,policy\n2.46,2.23,\"0,2\"\n4.1,2.05,\"0,0\"\n");
}
