#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "replica/eval.hpp"

namespace replica {

/// Execution time `fast` with probability `p_fast`, otherwise `slow`.
class BimodalParams {
 public:
   BimodalParams(double fast, double slow, double p_fast);

   double fast() const noexcept { return fast_; }
   double slow() const noexcept { return slow_; }
   double p_fast() const noexcept { return p_fast_; }
   double p_slow() const noexcept { return 1.0 - p_fast_; }
   double ratio() const noexcept { return fast_ / slow_; }
   DiscretePmf pmf() const { return DiscretePmf::bimodal(fast_, slow_, p_fast_); }

 private:
   double fast_;
   double slow_;
   double p_fast_;
};

struct Moments {
   double expected_T = 0.0;
   double expected_C = 0.0;
};

/// Which piece of the two-machine cost curve a replica start t2 falls on.
enum class TwoMachineBranch {
   EarlyOverlap,    // t2 < fast, t2 + fast < slow
   LateOverlap,     // t2 >= fast, t2 + fast < slow
   EarlyNoOverlap,  // t2 < fast, t2 + fast >= slow
   LateNoOverlap,   // t2 >= fast, t2 + fast >= slow
};

std::string_view to_string(TwoMachineBranch b);
TwoMachineBranch two_machine_branch(const BimodalParams& b, double t2);

/// Exact E[T], E[C] of policy [0, t2], 0 <= t2 <= slow.
///
/// With q = 1 - p_fast:
///   E[T] = fast p (1 + q) + slow q^2 + t2 p q   if t2 + fast < slow
///        = fast p + slow q                       otherwise
///   E[C] = 2 E[T] - t2                           if t2 < fast
///        = 2 E[T] - fast p - t2 q                otherwise
Moments closed_form_2m(const BimodalParams& b, double t2);

/// The two-machine expressions exactly as they were published, kept only to
/// report where they disagree with closed_form_2m.
Moments published_closed_form_2m(const BimodalParams& b, double t2);

struct Thresholds {
   double tau1 = 0.0;
   double tau2 = 0.0;
   double tau3 = 0.0;
};

/// Published slope thresholds between the [0,0], [0,fast], [0,slow] points.
/// Throws DegenerateDenominator when slow == 2 fast (tau3 undefined).
Thresholds thresholds(const BimodalParams& b);

struct SuboptimalityFlags {
   bool sub_a = true;   // [0, slow - fast]
   bool sub_b = false;  // [0, fast]
   bool sub_c = false;  // [0, slow]
};

SuboptimalityFlags suboptimality_checks(const BimodalParams& b);

/// Parameter regions of the published classification:
/// D: ratio > p/(1+p); F: ratio < (2p-1)/(4p-1); E in between.
enum class Region { D, E, F };
std::string_view to_string(Region r);
Region region(const BimodalParams& b);

enum class TwoMachinePolicy { BothAtZero, ReplicaAtFast, ReplicaAtSlow };
std::string_view to_string(TwoMachinePolicy p);
StartVector to_start_vector(const BimodalParams& b, TwoMachinePolicy p);

struct CandidateScore {
   TwoMachinePolicy policy;
   double expected_T = 0.0;
   double expected_C = 0.0;
   double cost = 0.0;
};

struct Classification {
   TwoMachinePolicy winner;
   std::array<CandidateScore, 3> candidates;
   Region region;
   /// Threshold rule as published, comparing (1 - lambda) / lambda to tau.
   std::optional<TwoMachinePolicy> published_prediction;
   /// Same rule with the weights swapped, comparing lambda / (1 - lambda).
   std::optional<TwoMachinePolicy> swapped_prediction;
};

/// Optimal two-machine policy by direct cost comparison of the three
/// candidates [0,0], [0,fast], [0,slow]; ties go to the earlier replica.
Classification classify_optimal(const BimodalParams& b, CostWeights w);

}  // namespace replica
