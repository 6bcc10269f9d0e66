#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "riscf/channel.hpp"
#include "riscf/phase_opt.hpp"
#include "riscf/scenario.hpp"
#include "riscf/sinr.hpp"

namespace riscf {

/// Per-location FIFO queues of residual file sizes (bits). The occupancy
/// X_k is exactly the queue length.
struct FlowState {
  std::vector<std::deque<double>> queues;
  long slot = 0;
  int tdma_cursor = 0;

  static FlowState empty(int num_locations);
  std::vector<int> occupancy() const;
  long total() const;
};

enum class PolicyKind { OptimizedStatic, RandomPerSlot, Tdma, EqualPhase };

PolicyKind policy_from_string(const std::string& name);
std::string to_string(PolicyKind kind);

/// RIS/scheduling policy for the simulator. Fixed-phase policies carry the
/// phase vector and its eta, computed once per scenario; RandomPerSlot
/// redraws phases every slot.
struct Policy {
  PolicyKind kind = PolicyKind::OptimizedStatic;
  PhaseConfig phase;
  double eta_fixed = 0.0;
};

/// Builds the policy for `kind`, solving the phase design once when needed.
Policy make_policy(PolicyKind kind, const ChannelStats& stats,
                   const OptimizeOptions& opts, Rng& rng);

struct StepStats {
  std::vector<int> arrivals;
  std::vector<int> departures;
  double served_bits = 0.0;
};

/// One slot: Poisson arrivals with Exp file sizes, then service of the
/// policy's active set at the closed-form SINR. Leftover slot capacity
/// rolls to the next flow in the same queue.
void advance(FlowState& state, const Policy& policy, const Scenario& scenario,
             const ChannelStats& stats, Rng& rng, StepStats* out = nullptr);

FlowState step(FlowState state, const Policy& policy, const Scenario& scenario,
               const ChannelStats& stats, Rng& rng);

/// Slot-indexed record of a run. Occupancy is stored per slot and location;
/// arrival/departure counts allow exact conservation checks.
struct Trace {
  int num_locations = 0;
  long horizon = 0;
  std::vector<std::uint32_t> x;          // [slot * K + k], end-of-slot occupancy
  std::vector<std::uint16_t> arrivals;   // per slot and location
  std::vector<std::uint16_t> departures;
  std::vector<int> initial_occupancy;
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;
  PolicyKind policy = PolicyKind::OptimizedStatic;

  int occupancy(long slot, int k) const { return static_cast<int>(x[slot * num_locations + k]); }
  std::vector<double> total_series() const;
  std::vector<double> location_series(int k) const;
};

Trace run(const Scenario& scenario, const Policy& policy, long horizon,
          std::uint64_t seed);
Trace run(const Scenario& scenario, const Policy& policy, long horizon,
          std::uint64_t seed, FlowState initial);

/// Sliding-window mean over the available history; a window longer than
/// the series collapses to the single full-series mean.
std::vector<double> moving_average(const std::vector<double>& series, long window);

/// (1/T) sum_{t<T} sum_k X_k(t).
double stability_metric(const Trace& trace, long T);

/// Least-squares slope of the tail of a series, with the naive standard
/// error of the fit. Points are subsampled to at most `max_points`.
struct SlopeFit {
  double slope = 0.0;
  double stderr_slope = 0.0;
  int n = 0;
};

SlopeFit fit_tail_slope(const std::vector<double>& series, double tail_fraction,
                        int max_points = 200);

struct RegionOptions {
  long horizon = 6000;
  long window = 0;            // 0: horizon / 50
  double slope_threshold = 1e-3;  // flows per slot
  double rel_tol = 0.03;      // bisection stop on the bracket width
  int max_grow = 14;          // doublings before a ray is declared unbounded
  long transient_cut = 0;     // slots dropped before the divergence fit
};

/// Whether a trace fails the divergence test (tail slope of the windowed
/// total-occupancy series above the threshold).
bool diverges(const Trace& trace, const RegionOptions& opts);

struct RayResult {
  std::vector<double> direction;  // unit vector in lambda-space
  double boundary_scale = 0.0;
  double half_width = 0.0;  // bisection tolerance
  bool bounded = true;
};

/// Bisects the load scale along each ray between a stable and an unstable
/// probe. Probes are independent simulations with derived seeds.
std::vector<RayResult> estimate_region(const Scenario& scenario, const Policy& policy,
                                       const std::vector<std::vector<double>>& rays,
                                       const RegionOptions& opts, std::uint64_t seed);

}  // namespace riscf
