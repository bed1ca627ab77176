#include "replica/policy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "replica/error.hpp"

namespace replica {

StartVector::StartVector(std::vector<double> times) : times_(std::move(times)) {
   std::sort(times_.begin(), times_.end());
}

StartVector StartVector::with(double t) const {
   std::vector<double> next(times_);
   next.insert(std::upper_bound(next.begin(), next.end(), t), t);
   StartVector v;
   v.times_ = std::move(next);
   return v;
}

StartVector make_start_vector(std::vector<double> times, const DiscretePmf& pmf) {
   for (double t : times) {
      if (!std::isfinite(t) || t < -kTimeEps || t > pmf.max_time() + kTimeEps)
         throw Error(ErrorKind::TimeOutOfRange,
                     "start time " + std::to_string(t) + " outside [0, " + std::to_string(pmf.max_time()) + "]");
   }
   for (double& t : times) t = std::clamp(t, 0.0, pmf.max_time());
   return StartVector(std::move(times));
}

StartVector canonicalize(std::vector<double> times, const DiscretePmf& pmf) {
   StartVector sorted = make_start_vector(std::move(times), pmf);
   if (sorted.size() == 0 || sorted[0] == 0.0) return sorted;
   double shift = sorted[0];
   std::vector<double> shifted(sorted.times().begin(), sorted.times().end());
   // Uniform shift: a machine at max_time is only a sentinel once t_1 = 0, so
   // it moves with the rest to keep every realization's (T, C) intact.
   for (double& t : shifted) t -= shift;
   return StartVector(std::move(shifted));
}

StartVector prune(const StartVector& v, const DiscretePmf& pmf) {
   const double lo = pmf.max_time() - pmf.min_time();
   std::vector<double> out(v.times().begin(), v.times().end());
   for (std::size_t j = 1; j < out.size(); ++j) {
      if (out[j] >= lo - kTimeEps && out[j] < pmf.max_time() - kTimeEps) out[j] = pmf.max_time();
   }
   return StartVector(std::move(out));
}

std::vector<double> parse_times(const std::string& text) {
   std::vector<double> out;
   std::stringstream ss(text);
   std::string item;
   while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      double value = 0.0;
      try {
         value = std::stod(item, &used);
      } catch (const std::exception&) {
         throw Error(ErrorKind::ParseError, "bad time '" + item + "'");
      }
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw Error(ErrorKind::ParseError, "bad time '" + item + "'");
      out.push_back(value);
   }
   if (out.empty()) throw Error(ErrorKind::ParseError, "empty time list");
   return out;
}

std::string format_times(std::span<const double> times) {
   std::string out;
   char buf[32];
   for (std::size_t i = 0; i < times.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.9g", times[i]);
      if (i) out += ',';
      out += buf;
   }
   return out;
}

}  // namespace replica
