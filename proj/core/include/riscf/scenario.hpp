#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace riscf {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Vec2& a, const Vec2& b);

/// Raised on malformed or inconsistent configuration. `line` is the source
/// line in the config file when known, 0 otherwise.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg, int line = 0);
  int line;
};

/// Three-slope distance/power-law model with a COST-Hata style fixed term.
/// Distances in km, heights in m, carrier in GHz. The published defaults:
/// breakpoints at 10 m and 50 m, AP height 15 m, user height 1.65 m.
struct ThreeSlopeParams {
  double carrier_ghz = 1.9;
  double ap_height_m = 15.0;
  double user_height_m = 1.65;
  double break0_km = 0.01;
  double break1_km = 0.05;

  double fixed_loss_db() const;
};

struct CorrelationModel {
  enum class Kind { Exponential, Isotropic, Identity };

  Kind kind = Kind::Identity;
  std::complex<double> rho_t{0.0, 0.0};
  std::complex<double> rho_r{0.0, 0.0};
  double spacing_wavelengths = 0.5;

  static CorrelationModel exponential(std::complex<double> rho_t,
                                      std::complex<double> rho_r);
  static CorrelationModel isotropic(double spacing_wavelengths);
  static CorrelationModel identity();

  void validate() const;
};

/// Full deterministic description of one experiment setup: geometry,
/// radio parameters and traffic. All gains and powers are linear (W);
/// dB only appears at the config boundary.
struct Scenario {
  double half_width_km = 1.0;
  Vec2 ris_position{};
  std::vector<Vec2> ap_positions;
  std::vector<Vec2> locations;
  int num_elements = 1;  // M

  double carrier_ghz = 1.9;
  double bandwidth_hz = 20e6;
  double noise_power_w = 0.0;
  std::vector<double> tx_power_w;      // per location
  std::vector<double> mean_file_bits;  // per location
  std::vector<double> arrival_rates;   // flows per slot, per location
  double slot_seconds = 1e-3;
  bool all_active_transmit = false;  // every queued flow transmits, not just head-of-line

  std::uint64_t seed = 1;
  CorrelationModel correlation;
  ThreeSlopeParams pathloss;

  int num_locations() const { return static_cast<int>(locations.size()); }
  int num_aps() const { return static_cast<int>(ap_positions.size()); }

  void validate() const;  // throws ConfigError
};

/// k_B T B * 10^(NF/10) at 290 K, in watts.
double thermal_noise_w(double bandwidth_hz, double noise_figure_db);

}  // namespace riscf
