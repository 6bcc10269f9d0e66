#pragma once

#include <vector>

#include "riscf/channel.hpp"
#include "riscf/linalg.hpp"
#include "riscf/rng.hpp"

namespace riscf {

/// RIS phase shifts theta in [0, 2pi) with the derived unit-modulus
/// vector phi, phi_m = e^{j theta_m}. The reflection matrix is diag(phi).
struct PhaseConfig {
  Eigen::VectorXd theta;
  CVector phi;

  static PhaseConfig from_angles(const Eigen::VectorXd& theta);
  int size() const { return static_cast<int>(theta.size()); }
};

/// Everything the closed-form SINR needs besides the location index.
/// tx_counts[j] is the number of simultaneous transmitters at location j
/// (0 or 1 under head-of-line service).
struct SinrInputs {
  const ChannelStats* stats = nullptr;
  double eta = 0.0;
  std::vector<int> tx_counts;
  const std::vector<double>* power_w = nullptr;
  double noise_w = 0.0;
};

/// eta = phi^H (r_t o r_r^T) phi = tr(Theta^H r_t Theta r_r), the scalar
/// through which the phase configuration enters every SINR.
double eta_value(const PhaseConfig& phase, const ChannelStats& stats);
double eta_value(const CVector& phi, const CMatrix& r);

/// Effective uplink SINR of the flow at location k. The interference sum
/// runs over all transmitting locations including j = k (the beamforming
/// uncertainty self term).
double sinr_closed_form(int k, const SinrInputs& in);

/// Empirical use-and-then-forget moments assembled from sampled channel
/// realizations, next to their trace-expression predictions.
struct MomentEstimates {
  double ds = 0.0, ds_pred = 0.0;
  double bu = 0.0, bu_pred = 0.0;
  double no = 0.0, no_pred = 0.0;
  std::vector<double> ui, ui_pred;  // indexed like tx locations, 0 for k itself
  double sinr = 0.0;
};

MomentEstimates estimate_moments(int k, const SinrInputs& in, const PhaseConfig& phase,
                                 int n_samples, Rng& rng);

/// Monte-Carlo SINR oracle for sinr_closed_form.
double sinr_monte_carlo(int k, const SinrInputs& in, const PhaseConfig& phase,
                        int n_samples, Rng& rng);

/// bandwidth * slot * log2(1 + sinr), in bits per slot.
double rate_bits_per_slot(double sinr, double bandwidth_hz, double slot_seconds);

}  // namespace riscf
