#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "replica/pmf.hpp"

namespace replica {

/// Single-task replication policy: machine j is asked to start the task at
/// times()[j] unless the task has already finished. Entries equal to the
/// distribution's max time mark machines that are never used.
///
/// A StartVector is a plain value; the distribution it is meant for is passed
/// to every operation that needs one.
class StartVector {
 public:
   StartVector() = default;
   /// Sorts the times. No range check (see make_start_vector).
   explicit StartVector(std::vector<double> times);

   std::span<const double> times() const noexcept { return times_; }
   std::size_t size() const noexcept { return times_.size(); }
   double operator[](std::size_t i) const { return times_[i]; }

   /// New vector with `t` inserted in order.
   StartVector with(double t) const;

   friend bool operator==(const StartVector&, const StartVector&) = default;
   friend auto operator<=>(const StartVector&, const StartVector&) = default;

 private:
   std::vector<double> times_;
};

/// Sorted vector after checking that every time lies in [0, max_time].
StartVector make_start_vector(std::vector<double> times, const DiscretePmf& pmf);

/// Sorted, range-checked, and shifted so the first machine starts at 0.
StartVector canonicalize(std::vector<double> times, const DiscretePmf& pmf);

/// Replaces every replica start in [max_time - min_time, max_time) with the
/// unused-machine sentinel. A replica started that late cannot finish before
/// the first machine, so it only adds machine time. The first machine is the
/// reference and is never touched.
StartVector prune(const StartVector& v, const DiscretePmf& pmf);

/// "0,2,7" <-> {0,2,7}
std::vector<double> parse_times(const std::string& text);
std::string format_times(std::span<const double> times);

}  // namespace replica
