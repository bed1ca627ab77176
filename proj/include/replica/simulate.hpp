#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "replica/pmf.hpp"
#include "replica/policy.hpp"

namespace replica {

/// Recorded in every simulation report.
inline constexpr std::string_view kRngAlgorithm = "splitmix64-per-trial/v1";

/// SplitMix64. Trial r of a run seeded with s draws from the stream keyed by
/// mix(s) ^ mix(r + 1), so trials can be evaluated in any order.
class TrialRng {
 public:
   TrialRng(std::uint64_t seed, std::uint64_t trial);

   std::uint64_t next();
   /// Uniform in [0, 1) with 53 random bits.
   double uniform();

 private:
   std::uint64_t state_;
};

/// Inverse-CDF sampler over a fixed distribution.
class PmfSampler {
 public:
   explicit PmfSampler(const DiscretePmf& pmf);
   double sample(TrialRng& rng) const;

 private:
   std::vector<double> support_;
   std::vector<double> cumulative_;
};

struct Realization {
   double T = 0.0;
   double C = 0.0;
};

/// One task with start times fixed up front: T = min_j (t_j + x_j),
/// C = sum_j (T - t_j)^+.
Realization static_realization(std::span<const double> starts, std::span<const double> run_times);

/// One task launched by feedback: walking the starts in order, copy j is
/// launched only if no launched copy has finished by t_j.
Realization dynamic_realization(std::span<const double> starts, std::span<const double> run_times);

struct SimEstimate {
   double mean_T = 0.0;
   double se_T = 0.0;
   double mean_C = 0.0;
   double se_C = 0.0;
   std::uint64_t trials = 0;
   std::uint64_t seed = 0;
};

/// n tasks, each following v; T is the max over tasks, C the per-task average.
SimEstimate simulate_static(const DiscretePmf& pmf, const StartVector& v, int tasks, std::uint64_t trials,
                            std::uint64_t seed);

/// Single task, feedback-driven launching.
SimEstimate simulate_dynamic(const DiscretePmf& pmf, const StartVector& v, std::uint64_t trials,
                             std::uint64_t seed);

/// Per-trial (T, C) for one task; both use the same draws for a given seed.
std::vector<Realization> trace_static(const DiscretePmf& pmf, const StartVector& v, std::uint64_t trials,
                                      std::uint64_t seed);
std::vector<Realization> trace_dynamic(const DiscretePmf& pmf, const StartVector& v, std::uint64_t trials,
                                       std::uint64_t seed);

}  // namespace replica
