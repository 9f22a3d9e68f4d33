#ifndef BBM_KERNELS_HPP
#define BBM_KERNELS_HPP

#include <vector>

#include "bbm/rng.hpp"

namespace bbm {

/**
 * Offspring distribution of a branching event: p_k = P[k offspring] for
 * k = 1..k_max. The constructor enforces the normalization the whole model
 * rests on:
 *
 *   sum_k p_k = 1,   sum_k k p_k = 2   (both to 1e-12),   k_max <= 64.
 *
 * With mean 2 the net growth rate of the population is 1, so E n(t) = e^t;
 * configurations with a different mean are rejected rather than rescaled
 * because every downstream formula assumes this normalization.
 */
class OffspringLaw {
 public:
  /// p_2 = 1: every branch event splits a particle in two.
  static OffspringLaw binary();

  /// probs[k-1] = p_k for k = 1..probs.size(). Throws std::invalid_argument
  /// with the violated constraint spelled out.
  static OffspringLaw from_probabilities(const std::vector<double>& probs);

  int k_max() const noexcept { return static_cast<int>(probs_.size()); }
  double probability(int k) const;  // k in 1..k_max
  double mean() const noexcept { return mean_; }

  /// K = sum_k k(k-1) p_k, the second factorial moment.
  double second_factorial_moment() const noexcept { return second_factorial_; }

  bool is_binary() const noexcept;

  bool operator==(const OffspringLaw&) const = default;

  static constexpr int kMaxSupport = 64;

 private:
  explicit OffspringLaw(std::vector<double> probs);

  std::vector<double> probs_;
  std::vector<double> cdf_;
  double mean_ = 0.0;
  double second_factorial_ = 0.0;

  friend int sample_offspring(RngStream&, const OffspringLaw&);
};

/// Brownian displacement over a time step: Normal(0, dt). dt must be > 0.
double sample_gaussian_increment(RngStream& rng, double dt);

/// Exponential(1) holding time until the next branch event.
double sample_branch_time(RngStream& rng);

/// Offspring count distributed according to the law. Always consumes exactly
/// one draw, so a degenerate law keeps streams aligned with a generic one.
int sample_offspring(RngStream& rng, const OffspringLaw& law);

struct BridgePoint {
  double time;
  double position;
};

/**
 * Discrete sample of a Brownian bridge from (0, start) to (length, end) on
 * the uniform grid {0, grid_dt, 2 grid_dt, ..., length}. grid_dt must divide
 * length into at least 2 steps. The marginal at time s has mean
 * start + (s/length)(end - start) and variance s(1 - s/length).
 */
std::vector<BridgePoint> sample_bridge_path(RngStream& rng, double length,
                                            double start, double end,
                                            double grid_dt);

}  // namespace bbm

#endif  // BBM_KERNELS_HPP
