#include "doctest.h"
#include "replica/bimodal.hpp"
#include "replica/error.hpp"
#include "replica/search.hpp"

using namespace replica;

namespace {

Moments exact(const BimodalParams& b, double t2) {
   PolicyEvaluation e = eval_single(b.pmf(), StartVector({0.0, t2}));
   return {e.expected_T, e.expected_C};
}

}  // namespace

TEST_CASE("closed_form_2m: worked examples") {
   BimodalParams b(2, 7, 0.9);
   Moments late = closed_form_2m(b, 2);
   CHECK(std::abs(late.expected_T - 2.23) < 1e-9);
   CHECK(std::abs(late.expected_C - 2.46) < 1e-9);
   Moments both = closed_form_2m(b, 0);
   CHECK(std::abs(both.expected_T - 2.05) < 1e-9);
   CHECK(std::abs(both.expected_C - 4.10) < 1e-9);
   Moments unused = closed_form_2m(b, 7);
   CHECK(std::abs(unused.expected_T - 2.5) < 1e-9);
   CHECK(std::abs(unused.expected_C - 2.5) < 1e-9);
   CHECK_THROWS_AS(closed_form_2m(b, 7.5), Error);
   CHECK_THROWS_AS(closed_form_2m(b, -1), Error);
}

TEST_CASE("closed_form_2m equals enumeration on every branch") {
   int seen[4] = {0, 0, 0, 0};
   for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
         for (int k = 0; k < 5; ++k) {
            const double a1 = 1.0 + i;
            const double a2 = a1 * (1.2 + 0.5 * j);
            const double p1 = 0.1 + 0.2 * k;
            BimodalParams b(a1, a2, p1);
            for (double t2 : {0.0, a1 / 2, a1, (a1 + a2) / 2, a2 - a1, a2}) {
               Moments cf = closed_form_2m(b, t2);
               Moments ref = exact(b, t2);
               ++seen[static_cast<int>(two_machine_branch(b, t2))];
               CHECK(std::abs(cf.expected_T - ref.expected_T) < 1e-9);
               CHECK(std::abs(cf.expected_C - ref.expected_C) < 1e-9);
            }
         }
   for (int s : seen) CHECK(s > 0);
}

TEST_CASE("published_closed_form_2m: where it agrees and where it does not") {
   BimodalParams b(2, 7, 0.9);
   // Replica after the fast time with no overlap: published and exact agree.
   Moments pub = published_closed_form_2m(b, 6);
   Moments ref = exact(b, 6);
   CHECK(std::abs(pub.expected_T - ref.expected_T) < 1e-9);
   CHECK(std::abs(pub.expected_C - ref.expected_C) < 1e-9);
   // The overlapping branch prints a different E[T].
   CHECK(std::abs(published_closed_form_2m(b, 2).expected_T - 2.23) > 1.0);
}

TEST_CASE("thresholds") {
   Thresholds t = thresholds(BimodalParams(2, 7, 0.9));
   CHECK(t.tau2 == doctest::Approx(1.18 / 0.09));

   Thresholds half = thresholds(BimodalParams(1, 5, 0.5));
   CHECK(half.tau2 == doctest::Approx(6.0));
   // Numerator reduces to a1 at p1 = 1/2.
   CHECK(half.tau3 == doctest::Approx(1.0 / ((5.0 - 2.0) * 0.5)));

   Thresholds mid = thresholds(BimodalParams(3, 10, 0.8));
   CHECK(mid.tau1 == doctest::Approx(2.16 / 1.12));
   CHECK(mid.tau2 == doctest::Approx(8.25));
   CHECK(mid.tau3 == doctest::Approx(0.1875));

   try {
      thresholds(BimodalParams(2, 4, 0.5));
      FAIL("expected DegenerateDenominator");
   } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateDenominator);
   }
}

TEST_CASE("suboptimality_checks and regions") {
   SuboptimalityFlags f = suboptimality_checks(BimodalParams(2, 7, 0.9));
   CHECK(f.sub_a);
   CHECK_FALSE(f.sub_b);
   CHECK(f.sub_c);
   CHECK(region(BimodalParams(2, 7, 0.9)) == Region::F);

   SuboptimalityFlags g = suboptimality_checks(BimodalParams(6, 20, 0.8));
   CHECK_FALSE(g.sub_b);
   CHECK_FALSE(g.sub_c);
   CHECK(region(BimodalParams(6, 20, 0.8)) == Region::E);

   CHECK(region(BimodalParams(9, 10, 0.5)) == Region::D);
   // p1 <= 1/4 makes the [0, a2] test vacuous.
   CHECK_FALSE(suboptimality_checks(BimodalParams(1, 100, 0.2)).sub_c);
}

TEST_CASE("classify_optimal: worked examples") {
   BimodalParams b(2, 7, 0.9);
   Classification half = classify_optimal(b, CostWeights(0.5));
   CHECK(half.winner == TwoMachinePolicy::ReplicaAtFast);
   CHECK(half.region == Region::F);
   CHECK(std::abs(half.candidates[0].cost - 3.075) < 1e-9);
   CHECK(std::abs(half.candidates[1].cost - 2.345) < 1e-9);
   CHECK(std::abs(half.candidates[2].cost - 2.5) < 1e-9);

   CHECK(classify_optimal(b, CostWeights(1.0)).winner == TwoMachinePolicy::BothAtZero);
   // E[C] of [0, a1] is 2.46 < 2.5, so replication wins even at lambda = 0.
   CHECK(classify_optimal(b, CostWeights(0.0)).winner == TwoMachinePolicy::ReplicaAtFast);
}

TEST_CASE("classify_optimal equals the enumerated argmin") {
   for (int i = 1; i <= 10; ++i)
      for (int j = 1; j <= 10; ++j)
         for (int k = 0; k <= 10; k += 2) {
            BimodalParams b(i * 0.095 * 10.0, 10.0, j * 0.09);
            CostWeights w(k / 10.0);
            Classification c = classify_optimal(b, w);
            double best = std::numeric_limits<double>::infinity();
            for (auto p : {TwoMachinePolicy::BothAtZero, TwoMachinePolicy::ReplicaAtFast,
                           TwoMachinePolicy::ReplicaAtSlow})
               best = std::min(best, cost(eval_single(b.pmf(), to_start_vector(b, p)), w));
            double got = cost(eval_single(b.pmf(), to_start_vector(b, c.winner)), w);
            CHECK(got <= best + 1e-9);
            if (c.region == Region::F) CHECK(c.winner != TwoMachinePolicy::ReplicaAtSlow);
            if (c.region == Region::D) CHECK(c.winner != TwoMachinePolicy::ReplicaAtFast);
         }
}
