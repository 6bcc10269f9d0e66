#pragma once

#include <functional>
#include <vector>

#include "riscf/channel.hpp"
#include "riscf/linalg.hpp"
#include "riscf/scenario.hpp"

namespace riscf {

/// Nonnegative fluid volumes Y with dY_k/dt = lambda_k - R_k while Y_k > 0.
struct FluidState {
  Eigen::VectorXd y;
  double t = 0.0;
};

/// Service rates (flows per slot) for a given occupancy pattern. R_k is the
/// rate location k gets if it transmits alongside the occupied set, so the
/// growth condition at a drained location is well defined.
using RateMap = std::function<Eigen::VectorXd(const std::vector<bool>& occupied)>;

RateMap make_rate_map(const Scenario& scenario, const ChannelStats& stats, double eta);

struct FluidTrajectory {
  double dt = 0.0;
  std::vector<double> times;
  std::vector<Eigen::VectorXd> y;
};

/// Explicit Euler with clipping at zero.
FluidTrajectory fluid_integrate(const FluidState& y0, const Eigen::VectorXd& lambda,
                                const RateMap& rates, double horizon, double dt);

/// L(Y) = sum_k 1/2 * e^{gamma lambda_k + eps} / (e^{gamma lambda_k + eps} - 1) * Y_k^2.
/// Requires gamma lambda_k + eps > 0 for every k.
double lyapunov_value(const Eigen::VectorXd& y, const Eigen::VectorXd& lambda,
                      double gamma, double eps);

struct DriftReport {
  double gamma = 0.0;
  double eps = 0.0;
  double lyapunov_initial = 0.0;
  double max_drift = 0.0;           // max dL/dt over the nonzero part
  double xi = 0.0;                  // min (-dL/dt)/sqrt(L), empirical
  double drain_bound_time = 0.0;    // (2/xi) sqrt(sum_k w_k / 2)
  double drained_at = -1.0;         // first time the trajectory is empty, -1 if never
  bool all_drifts_negative = false;
  bool drained_within_bound = false;
  bool empty_trajectory = false;    // Y(0) = 0
};

/// Differentiates L along a trajectory integrated under arrivals
/// gamma*lambda and checks the negative-drift / finite-drain claims.
DriftReport drift_check(const FluidTrajectory& traj, const Eigen::VectorXd& lambda,
                        double gamma, double eps);

/// log(1 + gamma x) >= gamma log(1 + x) for gamma in (0,1], x > 0.
bool lemma1_check(double gamma, double x);

}  // namespace riscf
