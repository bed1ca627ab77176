#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "json.hpp"

namespace replica {

/// Tolerance for every "same time" comparison in the library.
inline constexpr double kTimeEps = 1e-9;
/// Absolute tolerance on the sum of a probability vector.
inline constexpr double kProbSumTol = 1e-9;

/// Discrete execution-time distribution: X = support[i] with probability probs[i].
///
/// The support is strictly increasing and strictly positive, every atom has
/// positive mass, and the masses sum to one. Immutable once built.
class DiscretePmf {
 public:
   /// Validates and builds the distribution. A probability vector whose sum is
   /// within kProbSumTol of one is rescaled to sum to one exactly; anything
   /// further off is rejected.
   DiscretePmf(std::vector<double> support, std::vector<double> probs);

   /// Two-point distribution: `fast` with probability `p_fast`, otherwise `slow`.
   static DiscretePmf bimodal(double fast, double slow, double p_fast);

   std::span<const double> support() const noexcept { return support_; }
   std::span<const double> probs() const noexcept { return probs_; }
   std::size_t size() const noexcept { return support_.size(); }

   double min_time() const noexcept { return support_.front(); }
   double max_time() const noexcept { return support_.back(); }
   double mean() const;
   /// P(X <= x), with x compared under kTimeEps.
   double cdf(double x) const;

   friend bool operator==(const DiscretePmf&, const DiscretePmf&) = default;

 private:
   std::vector<double> support_;
   std::vector<double> probs_;
};

/// {"support":[...],"probs":[...]}
DiscretePmf pmf_from_json(const nlohmann::json& j);
nlohmann::json pmf_to_json(const DiscretePmf& pmf);
DiscretePmf load_pmf(const std::string& path);

}  // namespace replica
