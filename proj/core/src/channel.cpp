#include "riscf/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace riscf {

namespace {

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = M_PI * x;
  return std::sin(px) / px;
}

CMatrix exponential_correlation(std::complex<double> rho, int m) {
  CMatrix out(m, m);
  std::vector<Complex> powers(m);
  powers[0] = Complex(1.0, 0.0);
  for (int d = 1; d < m; ++d) powers[d] = powers[d - 1] * rho;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      out(i, j) = j >= i ? powers[j - i] : std::conj(powers[i - j]);
    }
  }
  return out;
}

CMatrix isotropic_correlation(double spacing_wavelengths, int m) {
  // Square grid layout; correlation sinc(2 d) with d in wavelengths.
  const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m))));
  std::vector<Vec2> pos(m);
  for (int i = 0; i < m; ++i) {
    pos[i] = {spacing_wavelengths * (i % side), spacing_wavelengths * (i / side)};
  }
  CMatrix out(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      out(i, j) = Complex(sinc(2.0 * distance(pos[i], pos[j])), 0.0);
    }
  }
  return out;
}

}  // namespace

CMatrix build_correlation(const CorrelationModel& model, int num_elements) {
  if (num_elements < 1) {
    throw std::invalid_argument("correlation matrix dimension must be >= 1");
  }
  model.validate();
  switch (model.kind) {
    case CorrelationModel::Kind::Identity:
      return CMatrix::Identity(num_elements, num_elements);
    case CorrelationModel::Kind::Exponential:
      return exponential_correlation(model.rho_t, num_elements);
    case CorrelationModel::Kind::Isotropic:
      return isotropic_correlation(model.spacing_wavelengths, num_elements);
  }
  throw std::logic_error("unreachable");
}

namespace {
// Exponential models carry distinct transmit/receive coefficients; the other
// kinds use one matrix for both sides.
CMatrix build_side(const CorrelationModel& model, int m, bool receive_side) {
  if (model.kind == CorrelationModel::Kind::Exponential) {
    model.validate();
    return exponential_correlation(receive_side ? model.rho_r : model.rho_t, m);
  }
  return build_correlation(model, m);
}
}  // namespace

double three_slope_pathloss(double distance_km, const ThreeSlopeParams& p) {
  if (!(distance_km > 0.0)) {
    throw std::domain_error("path loss requires a positive distance");
  }
  const double fixed = p.fixed_loss_db();
  double loss_db;
  if (distance_km > p.break1_km) {
    loss_db = fixed + 35.0 * std::log10(distance_km);
  } else if (distance_km > p.break0_km) {
    loss_db = fixed + 15.0 * std::log10(p.break1_km) + 20.0 * std::log10(distance_km);
  } else {
    loss_db = fixed + 15.0 * std::log10(p.break1_km) + 20.0 * std::log10(p.break0_km);
  }
  return std::pow(10.0, -loss_db / 10.0);
}

ChannelStats build_stats(const Scenario& scenario, const CorrelationModel& model) {
  scenario.validate();
  const int m = scenario.num_elements;

  ChannelStats stats;
  stats.r_t = build_side(model, m, /*receive_side=*/false);
  stats.r_r = build_side(model, m, /*receive_side=*/true);
  stats.r = stats.r_t.cwiseProduct(stats.r_r.transpose());
  stats.correlations_equal =
      (stats.r_t - stats.r_r).cwiseAbs().maxCoeff() <= 1e-12;

  stats.alpha_bar.reserve(scenario.locations.size());
  for (const auto& loc : scenario.locations) {
    stats.alpha_bar.push_back(
        three_slope_pathloss(distance(loc, scenario.ris_position), scenario.pathloss));
  }
  stats.alpha_tilde.reserve(scenario.ap_positions.size());
  for (const auto& ap : scenario.ap_positions) {
    const double a = three_slope_pathloss(distance(ap, scenario.ris_position), scenario.pathloss);
    stats.alpha_tilde.push_back(a);
    stats.alpha_tilde_sum += a;
    stats.alpha_tilde_sq_sum += a * a;
  }
  return stats;
}

ChannelStats build_stats(const Scenario& scenario) {
  return build_stats(scenario, scenario.correlation);
}

ChannelSampler::ChannelSampler(const ChannelStats& stats)
    : stats_(&stats),
      factor_r_(psd_factor(stats.r_r)),
      factor_t_(psd_factor(stats.r_t)) {
  for (double a : stats.alpha_bar) {
    if (!(a > 0.0)) throw std::domain_error("large-scale gain must be positive");
  }
  for (double a : stats.alpha_tilde) {
    if (!(a > 0.0)) throw std::domain_error("large-scale gain must be positive");
  }
}

ChannelRealization ChannelSampler::sample(Rng& rng) const {
  const int m = stats_->num_elements();
  ChannelRealization out;
  out.g.reserve(stats_->alpha_bar.size());
  out.h.reserve(stats_->alpha_tilde.size());
  CVector z(m);
  for (double a : stats_->alpha_bar) {
    fill_complex_gaussian(z, rng);
    out.g.push_back(std::sqrt(a) * (factor_r_ * z));
  }
  for (double a : stats_->alpha_tilde) {
    fill_complex_gaussian(z, rng);
    out.h.push_back(std::sqrt(a) * (factor_t_ * z));
  }
  return out;
}

ChannelRealization sample_realization(const ChannelStats& stats, Rng& rng) {
  return ChannelSampler(stats).sample(rng);
}

}  // namespace riscf
