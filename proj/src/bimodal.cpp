#include "replica/bimodal.hpp"

#include <cmath>
#include <limits>

#include "replica/error.hpp"
#include "replica/search.hpp"

namespace replica {

BimodalParams::BimodalParams(double fast, double slow, double p_fast) : fast_(fast), slow_(slow), p_fast_(p_fast) {
   if (!(fast > 0.0)) throw Error(ErrorKind::NonpositiveSupport, "fast time must be positive");
   if (!(fast < slow)) throw Error(ErrorKind::InvalidOrder, "fast time must be below slow time");
   if (!(p_fast > 0.0 && p_fast < 1.0)) throw Error(ErrorKind::ProbOutOfRange, "p_fast must lie in (0, 1)");
}

std::string_view to_string(TwoMachineBranch b) {
   switch (b) {
      case TwoMachineBranch::EarlyOverlap: return "early_overlap";
      case TwoMachineBranch::LateOverlap: return "late_overlap";
      case TwoMachineBranch::EarlyNoOverlap: return "early_no_overlap";
      case TwoMachineBranch::LateNoOverlap: return "late_no_overlap";
   }
   return "?";
}

TwoMachineBranch two_machine_branch(const BimodalParams& b, double t2) {
   const bool early = t2 < b.fast() - kTimeEps;
   const bool overlap = t2 + b.fast() < b.slow() - kTimeEps;
   if (overlap) return early ? TwoMachineBranch::EarlyOverlap : TwoMachineBranch::LateOverlap;
   return early ? TwoMachineBranch::EarlyNoOverlap : TwoMachineBranch::LateNoOverlap;
}

namespace {

void check_t2(const BimodalParams& b, double t2) {
   if (!(t2 >= -kTimeEps && t2 <= b.slow() + kTimeEps))
      throw Error(ErrorKind::TimeOutOfRange, "t2 = " + std::to_string(t2) + " outside [0, slow]");
}

bool early(TwoMachineBranch br) {
   return br == TwoMachineBranch::EarlyOverlap || br == TwoMachineBranch::EarlyNoOverlap;
}

bool overlap(TwoMachineBranch br) {
   return br == TwoMachineBranch::EarlyOverlap || br == TwoMachineBranch::LateOverlap;
}

}  // namespace

Moments closed_form_2m(const BimodalParams& b, double t2) {
   check_t2(b, t2);
   const double a1 = b.fast(), a2 = b.slow(), p = b.p_fast(), q = b.p_slow();
   const TwoMachineBranch br = two_machine_branch(b, t2);
   Moments m;
   m.expected_T = overlap(br) ? a1 * p * (1.0 + q) + a2 * q * q + t2 * p * q : a1 * p + a2 * q;
   m.expected_C = early(br) ? 2.0 * m.expected_T - t2 : 2.0 * m.expected_T - a1 * p - t2 * q;
   return m;
}

Moments published_closed_form_2m(const BimodalParams& b, double t2) {
   check_t2(b, t2);
   const double a1 = b.fast(), a2 = b.slow(), p = b.p_fast(), q = b.p_slow();
   const TwoMachineBranch br = two_machine_branch(b, t2);
   Moments m;
   if (overlap(br)) {
      m.expected_T = a1 * (q - p) * p + a2 * q * q + t2 * p * q;
      m.expected_C = early(br) ? 2.0 * m.expected_T - t2 * (p * p + q * q) : 2.0 * m.expected_T - a1 * p - t2 * q;
   } else {
      m.expected_T = a1 * p + a2 * q;
      m.expected_C = 2.0 * m.expected_T - a1 * p - t2 * q;
   }
   return m;
}

Thresholds thresholds(const BimodalParams& b) {
   const double a1 = b.fast(), a2 = b.slow(), p = b.p_fast();
   const double d1 = (a2 - a1) * (1.0 - p) * p;
   const double d2 = p * (1.0 - p);
   const double d3 = (a2 - 2.0 * a1) * p;
   constexpr double tiny = 1e-12;
   if (std::abs(d1) < tiny || std::abs(d2) < tiny || std::abs(d3) < tiny * a2)
      throw Error(ErrorKind::DegenerateDenominator, "a threshold denominator vanishes (slow == 2 fast?)");
   Thresholds t;
   t.tau1 = (a1 * p * (3.0 - 2.0 * p) + a2 * (1.0 - p) * (1.0 - 2.0 * p)) / d1;
   t.tau2 = (1.0 + 2.0 * p * (1.0 - p)) / d2;
   t.tau3 = (a1 * (4.0 * p - 1.0) + a2 * (1.0 - 2.0 * p)) / d3;
   return t;
}

SuboptimalityFlags suboptimality_checks(const BimodalParams& b) {
   const double p = b.p_fast();
   SuboptimalityFlags f;
   f.sub_b = b.ratio() > p / (1.0 + p);
   // For p <= 1/4 the bound is nonpositive or undefined, so it never triggers.
   f.sub_c = 4.0 * p - 1.0 > 0.0 && b.ratio() < (2.0 * p - 1.0) / (4.0 * p - 1.0);
   return f;
}

std::string_view to_string(Region r) {
   switch (r) {
      case Region::D: return "d";
      case Region::E: return "e";
      case Region::F: return "f";
   }
   return "?";
}

Region region(const BimodalParams& b) {
   const SuboptimalityFlags f = suboptimality_checks(b);
   if (f.sub_b) return Region::D;
   if (f.sub_c) return Region::F;
   return Region::E;
}

std::string_view to_string(TwoMachinePolicy p) {
   switch (p) {
      case TwoMachinePolicy::BothAtZero: return "[0,0]";
      case TwoMachinePolicy::ReplicaAtFast: return "[0,a1]";
      case TwoMachinePolicy::ReplicaAtSlow: return "[0,a2]";
   }
   return "?";
}

StartVector to_start_vector(const BimodalParams& b, TwoMachinePolicy p) {
   switch (p) {
      case TwoMachinePolicy::BothAtZero: return StartVector({0.0, 0.0});
      case TwoMachinePolicy::ReplicaAtFast: return StartVector({0.0, b.fast()});
      case TwoMachinePolicy::ReplicaAtSlow: return StartVector({0.0, b.slow()});
   }
   return {};
}

namespace {

std::optional<TwoMachinePolicy> threshold_rule(const BimodalParams& b, double ratio_weight) {
   Thresholds t;
   try {
      t = thresholds(b);
   } catch (const Error&) {
      return std::nullopt;
   }
   switch (region(b)) {
      case Region::D:
         return ratio_weight <= t.tau1 ? TwoMachinePolicy::ReplicaAtSlow : TwoMachinePolicy::BothAtZero;
      case Region::E:
         if (ratio_weight <= t.tau3) return TwoMachinePolicy::ReplicaAtSlow;
         if (ratio_weight <= t.tau2) return TwoMachinePolicy::ReplicaAtFast;
         return TwoMachinePolicy::BothAtZero;
      case Region::F:
         return ratio_weight <= t.tau2 ? TwoMachinePolicy::ReplicaAtFast : TwoMachinePolicy::BothAtZero;
   }
   return std::nullopt;
}

double weight_ratio(double num, double den) {
   return den == 0.0 ? std::numeric_limits<double>::infinity() : num / den;
}

}  // namespace

Classification classify_optimal(const BimodalParams& b, CostWeights w) {
   constexpr std::array order{TwoMachinePolicy::BothAtZero, TwoMachinePolicy::ReplicaAtFast,
                              TwoMachinePolicy::ReplicaAtSlow};
   Classification c{order[0], {}, region(b), std::nullopt, std::nullopt};
   for (std::size_t i = 0; i < order.size(); ++i) {
      const double t2 = to_start_vector(b, order[i])[1];
      const Moments m = closed_form_2m(b, t2);
      c.candidates[i] = {order[i], m.expected_T, m.expected_C, cost(m.expected_T, m.expected_C, w)};
   }
   double best = c.candidates[0].cost;
   for (const CandidateScore& s : c.candidates) {
      if (s.cost < best - kCostTieTol) {
         best = s.cost;
         c.winner = s.policy;
      }
   }
   const double lambda = w.lambda();
   c.published_prediction = threshold_rule(b, weight_ratio(1.0 - lambda, lambda));
   c.swapped_prediction = threshold_rule(b, weight_ratio(lambda, 1.0 - lambda));
   return c;
}

}  // namespace replica
