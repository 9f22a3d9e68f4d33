#ifndef BBM_PATH_HPP
#define BBM_PATH_HPP

#include <cstddef>
#include <vector>

namespace bbm {

/// Trajectory of one ancestral line sampled on the uniform grid k * grid_dt,
/// k = 0..size()-1. Produced by GenealogyTree::ancestral_path.
struct ParticlePath {
  double grid_dt = 0.0;
  std::vector<double> positions;

  std::size_t size() const noexcept { return positions.size(); }
  double time(std::size_t k) const noexcept { return static_cast<double>(k) * grid_dt; }
  double value(std::size_t k) const { return positions[k]; }
  double duration() const noexcept {
    return positions.empty() ? 0.0 : static_cast<double>(positions.size() - 1) * grid_dt;
  }
};

}  // namespace bbm

#endif  // BBM_PATH_HPP
