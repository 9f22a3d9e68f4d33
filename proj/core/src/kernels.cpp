#include "bbm/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bbm {

namespace {
constexpr double kNormalizationTol = 1e-12;
}

OffspringLaw::OffspringLaw(std::vector<double> probs) : probs_(std::move(probs)) {
  cdf_.reserve(probs_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    acc += probs_[i];
    cdf_.push_back(acc);
    mean_ += k * probs_[i];
    second_factorial_ += k * (k - 1.0) * probs_[i];
  }
  if (!cdf_.empty()) cdf_.back() = 1.0;
}

OffspringLaw OffspringLaw::binary() {
  return OffspringLaw({0.0, 1.0});
}

OffspringLaw OffspringLaw::from_probabilities(const std::vector<double>& probs) {
  if (probs.empty()) {
    throw std::invalid_argument("offspring law: probability list is empty");
  }
  if (probs.size() > static_cast<std::size_t>(kMaxSupport)) {
    throw std::invalid_argument(
        "offspring law: support exceeds k_max = 64 (finite second factorial "
        "moment is enforced by a finite support cap)");
  }
  double sum = 0.0, mean = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < 0.0 || probs[i] > 1.0) {
      throw std::invalid_argument(
          "offspring law: p_" + std::to_string(i + 1) + " outside [0, 1]");
    }
    sum += probs[i];
    mean += static_cast<double>(i + 1) * probs[i];
  }
  if (std::fabs(sum - 1.0) > kNormalizationTol) {
    throw std::invalid_argument(
        "offspring law: probabilities sum to " + std::to_string(sum) +
        ", must equal 1");
  }
  if (std::fabs(mean - 2.0) > kNormalizationTol) {
    throw std::invalid_argument(
        "offspring law: mean offspring count is " + std::to_string(mean) +
        ", must equal 2 (normalization sum k p_k = 2; rescaling is not "
        "applied because E n(t) = e^t depends on it)");
  }
  return OffspringLaw(probs);
}

double OffspringLaw::probability(int k) const {
  if (k < 1 || k > k_max()) return 0.0;
  return probs_[static_cast<std::size_t>(k - 1)];
}

bool OffspringLaw::is_binary() const noexcept {
  return probs_.size() == 2 && probs_[1] == 1.0;
}

double sample_gaussian_increment(RngStream& rng, double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("sample_gaussian_increment: dt must be > 0");
  }
  return std::sqrt(dt) * rng.next_gaussian();
}

double sample_branch_time(RngStream& rng) {
  return -std::log(rng.next_unit());
}

int sample_offspring(RngStream& rng, const OffspringLaw& law) {
  const double u = rng.next_unit();
  const auto it = std::lower_bound(law.cdf_.begin(), law.cdf_.end(), u);
  return static_cast<int>(it - law.cdf_.begin()) + 1;
}

std::vector<BridgePoint> sample_bridge_path(RngStream& rng, double length,
                                            double start, double end,
                                            double grid_dt) {
  if (!(length > 0.0) || !(grid_dt > 0.0)) {
    throw std::invalid_argument("sample_bridge_path: length and grid_dt must be > 0");
  }
  const double steps_real = length / grid_dt;
  const auto steps = static_cast<std::size_t>(std::llround(steps_real));
  if (steps < 2 || std::fabs(steps_real - static_cast<double>(steps)) > 1e-9 * steps_real) {
    throw std::invalid_argument(
        "sample_bridge_path: grid_dt must divide length into at least 2 steps");
  }
  std::vector<BridgePoint> path;
  path.reserve(steps + 1);
  path.push_back({0.0, start});
  double pos = start;
  for (std::size_t k = 1; k < steps; ++k) {
    const double t_prev = static_cast<double>(k - 1) * grid_dt;
    const double remaining = length - t_prev;
    const double mean = pos + (grid_dt / remaining) * (end - pos);
    const double var = grid_dt * (remaining - grid_dt) / remaining;
    pos = mean + std::sqrt(var) * rng.next_gaussian();
    path.push_back({static_cast<double>(k) * grid_dt, pos});
  }
  path.push_back({length, end});
  return path;
}

}  // namespace bbm
