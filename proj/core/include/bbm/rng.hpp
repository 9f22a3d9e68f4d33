#ifndef BBM_RNG_HPP
#define BBM_RNG_HPP

#include <cstdint>
#include <string_view>

namespace bbm {

/**
 * Counter-based random stream.
 *
 * Draw n of stream (seed, stream_id) is a pure function of (seed, stream_id, n):
 * the generator walks a SplitMix64 counter whose start state is a hash of the
 * seed and the stream id. Two consequences the rest of the project relies on:
 *
 *  - the same (seed, stream_id) replays the same sequence on any platform and
 *    under any thread schedule, and
 *  - distinct stream ids give statistically independent streams, so replicas
 *    can be dealt out to workers without coordination.
 *
 * Gaussians come from the inverse normal CDF (Wichura's AS 241, double
 * precision), one uniform per variate, so the mapping draw-index -> variate is
 * fixed. The algorithm pair is reported by rng_algorithm_id() and recorded in
 * run manifests.
 */
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  std::uint64_t draw_count() const noexcept { return counter_; }

  /// Jump to the state just after `n` draws from the start of the stream.
  void seek(std::uint64_t n) noexcept { counter_ = n; }

  std::uint64_t next_u64() noexcept;

  /// Uniform on the open interval (0, 1); never returns 0 or 1.
  double next_unit() noexcept;

  /// Standard normal variate (inverse-CDF transform of next_unit()).
  double next_gaussian() noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::uint64_t seed_;
  std::uint64_t stream_id_;
};

/// Identifier of the generator + gaussian transform, for run manifests.
std::string_view rng_algorithm_id() noexcept;

/// Inverse of the standard normal CDF (AS 241). Requires p in (0, 1).
double inverse_normal_cdf(double p);

}  // namespace bbm

#endif  // BBM_RNG_HPP
