#include "replica/corners.hpp"

#include <algorithm>
#include <cmath>

namespace replica {

void sort_unique_times(std::vector<double>& values) {
   std::sort(values.begin(), values.end());
   values.erase(std::unique(values.begin(), values.end(), [](double a, double b) { return b - a <= kTimeEps; }),
                values.end());
}

LatticeSet lattice_set(const DiscretePmf& pmf, int machines) {
   // Values reachable with L1 weight <= r, grown one unit at a time. The
   // intermediate sums may leave [0, max_time]; only the final set is clipped.
   std::vector<double> reach{0.0};
   for (int r = 0; r < machines; ++r) {
      std::vector<double> next(reach);
      next.reserve(reach.size() * (2 * pmf.size() + 1));
      for (double v : reach) {
         for (double a : pmf.support()) {
            next.push_back(v + a);
            next.push_back(v - a);
         }
      }
      sort_unique_times(next);
      reach = std::move(next);
   }
   LatticeSet out;
   out.machines = machines;
   for (double v : reach) {
      if (v >= -kTimeEps && v <= pmf.max_time() + kTimeEps) out.values.push_back(std::clamp(v, 0.0, pmf.max_time()));
   }
   sort_unique_times(out.values);
   return out;
}

double lattice_size_bound(std::size_t atoms, int machines) {
   // C(m+l-1, l-1) computed multiplicatively.
   double binom = 1.0;
   for (std::size_t i = 1; i < atoms; ++i) binom = binom * static_cast<double>(machines + static_cast<int>(i)) / static_cast<double>(i);
   return std::ldexp(binom, static_cast<int>(atoms));
}

std::vector<double> corner_points(std::span<const double> prefix, const DiscretePmf& pmf) {
   std::vector<double> u{0.0};
   u.insert(u.end(), pmf.support().begin(), pmf.support().end());
   for (double t : prefix) {
      std::vector<double> next;
      next.reserve(u.size() * (pmf.size() + 1));
      for (double c : u) {
         next.push_back(c + t);
         for (double a : pmf.support()) next.push_back(c + t - a);
      }
      std::erase_if(next, [&](double x) { return x < -kTimeEps || x > pmf.max_time() + kTimeEps; });
      for (double& x : next) x = std::clamp(x, 0.0, pmf.max_time());
      sort_unique_times(next);
      u = std::move(next);
   }
   return u;
}

}  // namespace replica
