#pragma once

#include <vector>

#include "riscf/linalg.hpp"
#include "riscf/rng.hpp"
#include "riscf/scenario.hpp"

namespace riscf {

/// M x M Hermitian PSD correlation matrix with unit diagonal.
/// Exponential: entry (i,j) = rho^(j-i) for j >= i, conjugate below.
/// Isotropic: sinc(2 d_ij) with d_ij the inter-element distance in
/// wavelengths on a square grid with the configured spacing.
CMatrix build_correlation(const CorrelationModel& model, int num_elements);

/// Linear power gain of the three-slope model. distance_km must be > 0.
double three_slope_pathloss(double distance_km, const ThreeSlopeParams& params);

/// Deterministic second-order channel description: large-scale gains and
/// the RIS transmit/receive correlation matrices, plus r = r_t o r_r^T
/// (elementwise), which is PSD by the Schur product theorem.
struct ChannelStats {
  std::vector<double> alpha_bar;    // per-location gain (user -> RIS)
  std::vector<double> alpha_tilde;  // per-AP gain (RIS -> AP)
  CMatrix r_t;
  CMatrix r_r;
  CMatrix r;

  double alpha_tilde_sum = 0.0;
  double alpha_tilde_sq_sum = 0.0;
  bool correlations_equal = false;  // r_t == r_r within tolerance

  int num_elements() const { return static_cast<int>(r.rows()); }
  int num_locations() const { return static_cast<int>(alpha_bar.size()); }
  int num_aps() const { return static_cast<int>(alpha_tilde.size()); }
};

ChannelStats build_stats(const Scenario& scenario, const CorrelationModel& model);
ChannelStats build_stats(const Scenario& scenario);

/// One block-fading draw: g[k] is the user k -> RIS channel, h[n] the
/// RIS -> AP n channel, all independent zero-mean complex Gaussians.
struct ChannelRealization {
  std::vector<CVector> g;
  std::vector<CVector> h;
};

/// Caches covariance square-root factors so repeated draws are cheap.
class ChannelSampler {
 public:
  explicit ChannelSampler(const ChannelStats& stats);
  ChannelRealization sample(Rng& rng) const;

  const CMatrix& factor_r() const { return factor_r_; }
  const CMatrix& factor_t() const { return factor_t_; }

 private:
  const ChannelStats* stats_;
  CMatrix factor_r_;  // L with L L^H = r_r
  CMatrix factor_t_;  // L with L L^H = r_t
};

ChannelRealization sample_realization(const ChannelStats& stats, Rng& rng);

}  // namespace riscf
