#include "replica/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "replica/error.hpp"

namespace replica {
namespace {

std::uint64_t mix(std::uint64_t z) {
   z += 0x9e3779b97f4a7c15ULL;
   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
   z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
   return z ^ (z >> 31);
}

/// Welford accumulator.
class RunningStats {
 public:
   void add(double x) {
      ++n_;
      double d = x - mean_;
      mean_ += d / static_cast<double>(n_);
      m2_ += d * (x - mean_);
   }
   double mean() const { return mean_; }
   double standard_error() const {
      if (n_ < 2) return 0.0;
      double var = m2_ / static_cast<double>(n_ - 1);
      return std::sqrt(var / static_cast<double>(n_));
   }

 private:
   std::uint64_t n_ = 0;
   double mean_ = 0.0;
   double m2_ = 0.0;
};

void check_trials(std::uint64_t trials) {
   if (trials < 1) throw Error(ErrorKind::PreconditionViolated, "need at least one trial");
}

template <class Realize>
std::vector<Realization> trace(const DiscretePmf& pmf, const StartVector& v, std::uint64_t trials,
                               std::uint64_t seed, Realize realize) {
   check_trials(trials);
   const PmfSampler sampler(pmf);
   std::vector<double> draws(v.size());
   std::vector<Realization> out;
   out.reserve(trials);
   for (std::uint64_t r = 0; r < trials; ++r) {
      TrialRng rng(seed, r);
      for (double& x : draws) x = sampler.sample(rng);
      out.push_back(realize(v.times(), draws));
   }
   return out;
}

SimEstimate summarize(std::span<const Realization> rs, std::uint64_t seed) {
   RunningStats t, c;
   for (const Realization& r : rs) {
      t.add(r.T);
      c.add(r.C);
   }
   return {t.mean(), t.standard_error(), c.mean(), c.standard_error(), rs.size(), seed};
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) : state_(mix(seed) ^ mix(trial + 1)) {}

std::uint64_t TrialRng::next() {
   state_ += 0x9e3779b97f4a7c15ULL;
   std::uint64_t z = state_;
   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
   z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
   return z ^ (z >> 31);
}

double TrialRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

PmfSampler::PmfSampler(const DiscretePmf& pmf) : support_(pmf.support().begin(), pmf.support().end()) {
   double c = 0.0;
   for (double p : pmf.probs()) {
      c += p;
      cumulative_.push_back(c);
   }
   cumulative_.back() = 1.0;
}

double PmfSampler::sample(TrialRng& rng) const {
   const double u = rng.uniform();
   auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
   return support_[static_cast<std::size_t>(it - cumulative_.begin())];
}

Realization static_realization(std::span<const double> starts, std::span<const double> run_times) {
   double T = std::numeric_limits<double>::infinity();
   for (std::size_t j = 0; j < starts.size(); ++j) T = std::min(T, starts[j] + run_times[j]);
   double C = 0.0;
   for (double t : starts) C += std::max(0.0, T - t);
   return {T, C};
}

Realization dynamic_realization(std::span<const double> starts, std::span<const double> run_times) {
   std::vector<std::size_t> order(starts.size());
   for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
   std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return starts[a] < starts[b]; });

   double first_finish = std::numeric_limits<double>::infinity();
   std::vector<std::size_t> launched;
   for (std::size_t j : order) {
      // Finished at or before this launch time: the copy is never started.
      if (first_finish <= starts[j]) break;
      launched.push_back(j);
      first_finish = std::min(first_finish, starts[j] + run_times[j]);
   }
   double C = 0.0;
   for (std::size_t j : launched) C += first_finish - starts[j];
   return {first_finish, C};
}

std::vector<Realization> trace_static(const DiscretePmf& pmf, const StartVector& v, std::uint64_t trials,
                                      std::uint64_t seed) {
   return trace(pmf, v, trials, seed, static_realization);
}

std::vector<Realization> trace_dynamic(const DiscretePmf& pmf, const StartVector& v, std::uint64_t trials,
                                       std::uint64_t seed) {
   return trace(pmf, v, trials, seed, dynamic_realization);
}

SimEstimate simulate_static(const DiscretePmf& pmf, const StartVector& v, int tasks, std::uint64_t trials,
                            std::uint64_t seed) {
   check_trials(trials);
   if (tasks < 1) throw Error(ErrorKind::PreconditionViolated, "task count must be at least 1");
   const PmfSampler sampler(pmf);
   std::vector<double> draws(v.size());
   RunningStats t_stats, c_stats;
   for (std::uint64_t r = 0; r < trials; ++r) {
      TrialRng rng(seed, r);
      double T = 0.0;
      double C = 0.0;
      for (int i = 0; i < tasks; ++i) {
         for (double& x : draws) x = sampler.sample(rng);
         Realization task = static_realization(v.times(), draws);
         T = std::max(T, task.T);
         C += task.C;
      }
      t_stats.add(T);
      c_stats.add(C / tasks);
   }
   return {t_stats.mean(), t_stats.standard_error(), c_stats.mean(), c_stats.standard_error(), trials, seed};
}

SimEstimate simulate_dynamic(const DiscretePmf& pmf, const StartVector& v, std::uint64_t trials,
                             std::uint64_t seed) {
   return summarize(trace_dynamic(pmf, v, trials, seed), seed);
}

}  // namespace replica
