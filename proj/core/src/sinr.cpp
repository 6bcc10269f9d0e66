#include "riscf/sinr.hpp"

#include <cmath>
#include <stdexcept>

namespace riscf {

PhaseConfig PhaseConfig::from_angles(const Eigen::VectorXd& theta) {
  PhaseConfig out;
  const double two_pi = 2.0 * M_PI;
  out.theta = theta;
  out.phi.resize(theta.size());
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    double t = std::fmod(theta(i), two_pi);
    if (t < 0.0) t += two_pi;
    out.theta(i) = t;
    out.phi(i) = std::polar(1.0, t);
  }
  return out;
}

double eta_value(const CVector& phi, const CMatrix& r) {
  const double v = real_quadratic_form(r, phi);
  // PSD quadratic form; tiny negatives are roundoff.
  return std::max(v, 0.0);
}

double eta_value(const PhaseConfig& phase, const ChannelStats& stats) {
  if (phase.size() != stats.num_elements()) {
    throw std::invalid_argument("phase/correlation dimension mismatch");
  }
  return eta_value(phase.phi, stats.r);
}

namespace {

void check_inputs(int k, const SinrInputs& in) {
  if (in.stats == nullptr || in.power_w == nullptr) {
    throw std::invalid_argument("SINR inputs incomplete");
  }
  const int num_loc = in.stats->num_locations();
  if (k < 0 || k >= num_loc) throw std::domain_error("location index out of range");
  if (static_cast<int>(in.tx_counts.size()) != num_loc ||
      static_cast<int>(in.power_w->size()) != num_loc) {
    throw std::invalid_argument("SINR inputs: per-location sizes disagree");
  }
  if (in.tx_counts[k] < 1) throw std::domain_error("location k is not transmitting");
  if (in.eta < 0.0) throw std::domain_error("eta must be nonnegative");
  if (!(in.noise_w > 0.0)) throw std::domain_error("noise power must be positive");
}

}  // namespace

double sinr_closed_form(int k, const SinrInputs& in) {
  check_inputs(k, in);
  const ChannelStats& s = *in.stats;
  const double a_k = s.alpha_bar[k];
  const double sum_at = s.alpha_tilde_sum;
  const double sum_at2 = s.alpha_tilde_sq_sum;

  double interference = 0.0;  // includes j = k, the beamforming-uncertainty self term
  for (int j = 0; j < s.num_locations(); ++j) {
    if (in.tx_counts[j] <= 0) continue;
    interference += in.tx_counts[j] * a_k * s.alpha_bar[j] * sum_at2 * in.eta * (*in.power_w)[j];
  }
  const double numerator = a_k * a_k * sum_at * sum_at * in.eta * (*in.power_w)[k];
  const double denominator = interference + in.noise_w * a_k * sum_at;
  return numerator / denominator;
}

MomentEstimates estimate_moments(int k, const SinrInputs& in, const PhaseConfig& phase,
                                 int n_samples, Rng& rng) {
  check_inputs(k, in);
  if (n_samples < 1) throw std::invalid_argument("need at least one sample");
  const ChannelStats& s = *in.stats;
  if (phase.size() != s.num_elements()) {
    throw std::invalid_argument("phase/correlation dimension mismatch");
  }
  const int num_loc = s.num_locations();
  const int num_ap = s.num_aps();
  const int m = s.num_elements();
  for (int c : in.tx_counts) {
    if (c > 1) throw std::invalid_argument("moment oracle assumes one transmitter per location");
  }

  // u_{n,j} = h_n^H Theta g_j = sqrt(alpha_tilde_n alpha_bar_j) w_n^H B z_j
  // with B = L_t^H Theta L_r and w, z standard complex Gaussians.
  ChannelSampler sampler(s);
  const CMatrix b = sampler.factor_t().adjoint() * phase.phi.asDiagonal() * sampler.factor_r();

  std::vector<int> tx;  // transmitting locations
  for (int j = 0; j < num_loc; ++j) {
    if (in.tx_counts[j] > 0) tx.push_back(j);
  }

  double sum_v = 0.0, sum_v2 = 0.0;
  std::vector<double> sum_ui(num_loc, 0.0);
  CMatrix z(m, num_loc), y(m, num_loc), w(m, num_ap);
  CMatrix u(num_ap, num_loc);
  for (int it = 0; it < n_samples; ++it) {
    for (int j = 0; j < num_loc; ++j) {
      auto col = z.col(j);
      for (int i = 0; i < m; ++i) col(i) = standard_complex_gaussian(rng);
    }
    for (int n = 0; n < num_ap; ++n) {
      auto col = w.col(n);
      for (int i = 0; i < m; ++i) col(i) = standard_complex_gaussian(rng);
    }
    y.noalias() = b * z;
    u.noalias() = w.adjoint() * y;
    for (int n = 0; n < num_ap; ++n) {
      for (int j = 0; j < num_loc; ++j) {
        u(n, j) *= std::sqrt(s.alpha_tilde[n] * s.alpha_bar[j]);
      }
    }
    const double v = u.col(k).squaredNorm();  // u_k^H u_k
    sum_v += v;
    sum_v2 += v * v;
    for (int j : tx) {
      if (j == k) continue;
      sum_ui[j] += std::norm((u.col(k).adjoint() * u.col(j)).value());
    }
  }

  const double inv_n = 1.0 / n_samples;
  const double mean_v = sum_v * inv_n;

  MomentEstimates est;
  est.ds = mean_v * mean_v;
  est.bu = std::max(sum_v2 * inv_n - mean_v * mean_v, 0.0);
  est.no = in.noise_w * mean_v;
  est.ui.assign(num_loc, 0.0);
  est.ui_pred.assign(num_loc, 0.0);

  const double eta = eta_value(phase, s);
  const double t_k = s.alpha_bar[k] * eta;
  est.ds_pred = t_k * t_k * s.alpha_tilde_sum * s.alpha_tilde_sum;
  est.bu_pred = t_k * t_k * s.alpha_tilde_sq_sum;
  est.no_pred = in.noise_w * t_k * s.alpha_tilde_sum;

  double interference = est.bu * (*in.power_w)[k];
  for (int j : tx) {
    if (j == k) continue;
    est.ui[j] = sum_ui[j] * inv_n;
    est.ui_pred[j] = s.alpha_bar[k] * s.alpha_bar[j] * eta * eta * s.alpha_tilde_sq_sum;
    interference += est.ui[j] * (*in.power_w)[j];
  }
  est.sinr = est.ds * (*in.power_w)[k] / (interference + est.no);
  return est;
}

double sinr_monte_carlo(int k, const SinrInputs& in, const PhaseConfig& phase,
                        int n_samples, Rng& rng) {
  return estimate_moments(k, in, phase, n_samples, rng).sinr;
}

double rate_bits_per_slot(double sinr, double bandwidth_hz, double slot_seconds) {
  if (sinr < 0.0) throw std::domain_error("SINR must be nonnegative");
  return bandwidth_hz * slot_seconds * std::log2(1.0 + sinr);
}

}  // namespace riscf
