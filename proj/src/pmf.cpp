#include "replica/pmf.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <string>

#include "replica/error.hpp"

namespace replica {

DiscretePmf::DiscretePmf(std::vector<double> support, std::vector<double> probs)
   : support_(std::move(support)), probs_(std::move(probs)) {
   if (support_.empty() || support_.size() != probs_.size())
      throw Error(ErrorKind::LengthMismatch, "support has " + std::to_string(support_.size()) +
                                                " entries, probs has " + std::to_string(probs_.size()));
   for (std::size_t i = 0; i < support_.size(); ++i) {
      if (!std::isfinite(support_[i]) || support_[i] <= 0.0)
         throw Error(ErrorKind::NonpositiveSupport, "support[" + std::to_string(i) + "] = " + std::to_string(support_[i]));
      if (i > 0 && !(support_[i] > support_[i - 1]))
         throw Error(ErrorKind::UnsortedSupport, "support must be strictly increasing at index " + std::to_string(i));
      if (!(probs_[i] > 0.0 && probs_[i] <= 1.0))
         throw Error(ErrorKind::ProbOutOfRange, "probs[" + std::to_string(i) + "] = " + std::to_string(probs_[i]));
   }
   double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
   if (std::abs(total - 1.0) > kProbSumTol)
      throw Error(ErrorKind::ProbSumMismatch, "probabilities sum to " + std::to_string(total));
   // Sums within rounding noise of one are kept as given, so rescaling is idempotent.
   if (std::abs(total - 1.0) > 64.0 * std::numeric_limits<double>::epsilon())
      for (double& p : probs_) p /= total;
}

DiscretePmf DiscretePmf::bimodal(double fast, double slow, double p_fast) {
   if (!(fast > 0.0))
      throw Error(ErrorKind::NonpositiveSupport, "fast time must be positive");
   if (!(fast < slow))
      throw Error(ErrorKind::InvalidOrder, "fast time must be strictly below slow time");
   if (!(p_fast > 0.0 && p_fast < 1.0))
      throw Error(ErrorKind::ProbOutOfRange, "p_fast must lie in (0, 1)");
   return DiscretePmf({fast, slow}, {p_fast, 1.0 - p_fast});
}

double DiscretePmf::mean() const {
   double m = 0.0;
   for (std::size_t i = 0; i < size(); ++i) m += support_[i] * probs_[i];
   return m;
}

double DiscretePmf::cdf(double x) const {
   double c = 0.0;
   for (std::size_t i = 0; i < size() && support_[i] <= x + kTimeEps; ++i) c += probs_[i];
   return c;
}

DiscretePmf pmf_from_json(const nlohmann::json& j) {
   if (!j.is_object() || !j.contains("support") || !j.contains("probs"))
      throw Error(ErrorKind::ParseError, "expected an object with \"support\" and \"probs\"");
   try {
      return DiscretePmf(j.at("support").get<std::vector<double>>(), j.at("probs").get<std::vector<double>>());
   } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
   }
}

nlohmann::json pmf_to_json(const DiscretePmf& pmf) {
   return {{"support", std::vector<double>(pmf.support().begin(), pmf.support().end())},
           {"probs", std::vector<double>(pmf.probs().begin(), pmf.probs().end())}};
}

DiscretePmf load_pmf(const std::string& path) {
   std::ifstream in(path);
   if (!in) throw Error(ErrorKind::FileNotFound, path);
   nlohmann::json j;
   try {
      in >> j;
   } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, path + ": " + e.what());
   }
   return pmf_from_json(j);
}

}  // namespace replica
