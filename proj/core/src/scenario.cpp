#include "riscf/scenario.hpp"

#include <cmath>

namespace riscf {

double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

ConfigError::ConfigError(const std::string& msg, int line_no)
    : std::runtime_error(line_no > 0 ? msg + " (line " + std::to_string(line_no) + ")"
                                     : msg),
      line(line_no) {}

double ThreeSlopeParams::fixed_loss_db() const {
  const double f_mhz = carrier_ghz * 1e3;
  const double lf = std::log10(f_mhz);
  return 46.3 + 33.9 * lf - 13.82 * std::log10(ap_height_m) -
         (1.1 * lf - 0.7) * user_height_m + (1.56 * lf - 0.8);
}

CorrelationModel CorrelationModel::exponential(std::complex<double> rho_t,
                                               std::complex<double> rho_r) {
  CorrelationModel m;
  m.kind = Kind::Exponential;
  m.rho_t = rho_t;
  m.rho_r = rho_r;
  m.validate();
  return m;
}

CorrelationModel CorrelationModel::isotropic(double spacing_wavelengths) {
  CorrelationModel m;
  m.kind = Kind::Isotropic;
  m.spacing_wavelengths = spacing_wavelengths;
  m.validate();
  return m;
}

CorrelationModel CorrelationModel::identity() {
  CorrelationModel m;
  m.kind = Kind::Identity;
  return m;
}

void CorrelationModel::validate() const {
  if (kind == Kind::Exponential) {
    if (std::abs(rho_t) > 1.0 || std::abs(rho_r) > 1.0) {
      throw ConfigError("correlation coefficient must satisfy |rho| <= 1");
    }
  } else if (kind == Kind::Isotropic) {
    if (!(spacing_wavelengths > 0.0)) {
      throw ConfigError("isotropic element spacing must be positive");
    }
  }
}

void Scenario::validate() const {
  const int k = num_locations();
  const int n = num_aps();
  if (n < 1) throw ConfigError("at least one AP required");
  if (k < 1) throw ConfigError("at least one location required");
  if (num_elements < 1) throw ConfigError("RIS element count must be >= 1");
  if (!(noise_power_w > 0.0)) throw ConfigError("noise power must be > 0");
  if (!(bandwidth_hz > 0.0)) throw ConfigError("bandwidth must be > 0");
  if (!(slot_seconds > 0.0)) throw ConfigError("slot duration must be > 0");
  if (!(half_width_km > 0.0)) throw ConfigError("area half-width must be > 0");

  auto check_vec = [&](const std::vector<double>& v, const char* name, bool strict) {
    if (static_cast<int>(v.size()) != k) {
      throw ConfigError(std::string(name) + ": expected one entry per location");
    }
    for (double x : v) {
      if (strict ? !(x > 0.0) : !(x >= 0.0)) {
        throw ConfigError(std::string(name) + ": entries must be " +
                          (strict ? "positive" : "nonnegative"));
      }
    }
  };
  check_vec(tx_power_w, "tx power", true);
  check_vec(mean_file_bits, "mean file size", true);
  check_vec(arrival_rates, "arrival rates", false);

  auto inside = [&](const Vec2& p) {
    return std::abs(p.x) <= half_width_km + 1e-12 && std::abs(p.y) <= half_width_km + 1e-12;
  };
  if (!inside(ris_position)) throw ConfigError("RIS position outside the area");
  for (const auto& p : ap_positions) {
    if (!inside(p)) throw ConfigError("AP position outside the area");
    if (distance(p, ris_position) <= 0.0) {
      throw ConfigError("AP coincident with the RIS position");
    }
  }
  for (const auto& p : locations) {
    if (!inside(p)) throw ConfigError("location outside the area");
    if (distance(p, ris_position) <= 0.0) {
      throw ConfigError("location coincident with the RIS position");
    }
  }
  correlation.validate();
}

double thermal_noise_w(double bandwidth_hz, double noise_figure_db) {
  // -174 dBm/Hz at 290 K
  const double noise_dbm = -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
  return std::pow(10.0, (noise_dbm - 30.0) / 10.0);
}

}  // namespace riscf
