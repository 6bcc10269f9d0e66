#include "riscf/flowsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace riscf {

FlowState FlowState::empty(int num_locations) {
  FlowState st;
  st.queues.resize(num_locations);
  return st;
}

std::vector<int> FlowState::occupancy() const {
  std::vector<int> x(queues.size());
  for (std::size_t k = 0; k < queues.size(); ++k) x[k] = static_cast<int>(queues[k].size());
  return x;
}

long FlowState::total() const {
  long t = 0;
  for (const auto& q : queues) t += static_cast<long>(q.size());
  return t;
}

PolicyKind policy_from_string(const std::string& name) {
  if (name == "optimized") return PolicyKind::OptimizedStatic;
  if (name == "random") return PolicyKind::RandomPerSlot;
  if (name == "tdma") return PolicyKind::Tdma;
  if (name == "equal") return PolicyKind::EqualPhase;
  throw ConfigError("unknown policy '" + name + "' (optimized|random|tdma|equal)");
}

std::string to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::OptimizedStatic: return "optimized";
    case PolicyKind::RandomPerSlot: return "random";
    case PolicyKind::Tdma: return "tdma";
    case PolicyKind::EqualPhase: return "equal";
  }
  return "unknown";
}

Policy make_policy(PolicyKind kind, const ChannelStats& stats,
                   const OptimizeOptions& opts, Rng& rng) {
  Policy policy;
  policy.kind = kind;
  switch (kind) {
    case PolicyKind::OptimizedStatic:
    case PolicyKind::Tdma: {
      // One solve per scenario; the maximizer does not depend on the queue
      // state, so the same phases serve every slot (TDMA reuses them: the
      // SNR-maximizing phases coincide with the eta-maximizing ones).
      OptimizeOptions o = opts;
      o.correlations_equal = opts.correlations_equal || stats.correlations_equal;
      PhaseSolution sol = optimize(stats.r, o, rng);
      policy.phase = sol.phase;
      policy.eta_fixed = sol.eta_achieved;
      break;
    }
    case PolicyKind::EqualPhase:
      policy.phase = equal_phase_config(stats.num_elements());
      policy.eta_fixed = eta_value(policy.phase.phi, stats.r);
      break;
    case PolicyKind::RandomPerSlot:
      policy.phase = equal_phase_config(stats.num_elements());  // placeholder, redrawn each slot
      policy.eta_fixed = 0.0;
      break;
  }
  return policy;
}

namespace {

// Serves `budget` bits from the FIFO queue; departures complete within the
// slot and leftover capacity rolls to the next flow.
int drain_queue(std::deque<double>& queue, double budget) {
  int departures = 0;
  while (budget > 0.0 && !queue.empty()) {
    if (queue.front() <= budget) {
      budget -= queue.front();
      queue.pop_front();
      ++departures;
    } else {
      queue.front() -= budget;
      budget = 0.0;
    }
  }
  return departures;
}

}  // namespace

void advance(FlowState& state, const Policy& policy, const Scenario& scenario,
             const ChannelStats& stats, Rng& rng, StepStats* out) {
  const int num_loc = scenario.num_locations();
  if (static_cast<int>(state.queues.size()) != num_loc) {
    throw std::invalid_argument("state/scenario location mismatch");
  }
  if (out != nullptr) {
    out->arrivals.assign(num_loc, 0);
    out->departures.assign(num_loc, 0);
    out->served_bits = 0.0;
  }

  // arrivals
  for (int k = 0; k < num_loc; ++k) {
    const double lambda = scenario.arrival_rates[k];
    int n_arr = 0;
    if (lambda > 0.0) {
      std::poisson_distribution<int> poisson(lambda);
      n_arr = poisson(rng);
    }
    if (n_arr > 0) {
      std::exponential_distribution<double> size(1.0 / scenario.mean_file_bits[k]);
      for (int i = 0; i < n_arr; ++i) state.queues[k].push_back(size(rng));
    }
    if (out != nullptr) out->arrivals[k] = n_arr;
  }

  // service
  double eta = policy.eta_fixed;
  if (policy.kind == PolicyKind::RandomPerSlot) {
    eta = eta_value(random_phases(stats.num_elements(), rng).phi, stats.r);
  }

  SinrInputs in;
  in.stats = &stats;
  in.eta = eta;
  in.power_w = &scenario.tx_power_w;
  in.noise_w = scenario.noise_power_w;
  in.tx_counts.assign(num_loc, 0);

  if (policy.kind == PolicyKind::Tdma) {
    // round-robin over occupied locations, one served per slot
    int chosen = -1;
    for (int off = 0; off < num_loc; ++off) {
      const int k = (state.tdma_cursor + off) % num_loc;
      if (!state.queues[k].empty()) {
        chosen = k;
        break;
      }
    }
    if (chosen >= 0) {
      state.tdma_cursor = (chosen + 1) % num_loc;
      in.tx_counts[chosen] = 1;
      const double sinr = sinr_closed_form(chosen, in);
      const double budget = rate_bits_per_slot(sinr, scenario.bandwidth_hz, scenario.slot_seconds);
      const int dep = drain_queue(state.queues[chosen], budget);
      if (out != nullptr) {
        out->departures[chosen] = dep;
        out->served_bits += budget;
      }
    }
  } else {
    for (int k = 0; k < num_loc; ++k) {
      const int x = static_cast<int>(state.queues[k].size());
      if (x == 0) continue;
      in.tx_counts[k] = scenario.all_active_transmit ? x : 1;
    }
    if (eta > 0.0) {
      for (int k = 0; k < num_loc; ++k) {
        if (in.tx_counts[k] == 0) continue;
        const double sinr = sinr_closed_form(k, in);
        const double per_tx =
            rate_bits_per_slot(sinr, scenario.bandwidth_hz, scenario.slot_seconds);
        int dep = 0;
        if (scenario.all_active_transmit) {
          // every queued flow is served at its own rate
          auto& q = state.queues[k];
          for (auto it = q.begin(); it != q.end();) {
            if (*it <= per_tx) {
              it = q.erase(it);
              ++dep;
            } else {
              *it -= per_tx;
              ++it;
            }
          }
        } else {
          dep = drain_queue(state.queues[k], per_tx);
        }
        if (out != nullptr) {
          out->departures[k] = dep;
          out->served_bits += per_tx * in.tx_counts[k];
        }
      }
    }
  }
  ++state.slot;
}

FlowState step(FlowState state, const Policy& policy, const Scenario& scenario,
               const ChannelStats& stats, Rng& rng) {
  advance(state, policy, scenario, stats, rng);
  return state;
}

namespace {
Trace run_impl(const Scenario& scenario, const ChannelStats& stats, const Policy& policy,
               long horizon, std::uint64_t seed, FlowState state) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  const int num_loc = scenario.num_locations();

  Trace trace;
  trace.num_locations = num_loc;
  trace.horizon = horizon;
  trace.seed = seed;
  trace.policy = policy.kind;
  trace.initial_occupancy = state.occupancy();
  trace.x.resize(static_cast<std::size_t>(horizon) * num_loc);
  trace.arrivals.resize(trace.x.size());
  trace.departures.resize(trace.x.size());

  Rng rng = make_rng(seed);
  StepStats step_stats;
  std::vector<long> net(num_loc);
  for (int k = 0; k < num_loc; ++k) net[k] = trace.initial_occupancy[k];
  for (long t = 0; t < horizon; ++t) {
    advance(state, policy, scenario, stats, rng, &step_stats);
    const std::size_t base = static_cast<std::size_t>(t) * num_loc;
    for (int k = 0; k < num_loc; ++k) {
      const long x_k = static_cast<long>(state.queues[k].size());
      if (step_stats.arrivals[k] > 65535 || step_stats.departures[k] > 65535) {
        throw std::overflow_error("per-slot event count exceeds trace storage");
      }
      trace.x[base + k] = static_cast<std::uint32_t>(x_k);
      trace.arrivals[base + k] = static_cast<std::uint16_t>(step_stats.arrivals[k]);
      trace.departures[base + k] = static_cast<std::uint16_t>(step_stats.departures[k]);
      // conservation is an exact integer identity, checked as we go
      net[k] += step_stats.arrivals[k] - step_stats.departures[k];
      if (net[k] != x_k) throw std::logic_error("flow conservation violated");
    }
  }
  return trace;
}
}  // namespace

Trace run(const Scenario& scenario, const Policy& policy, long horizon, std::uint64_t seed) {
  ChannelStats stats = build_stats(scenario);
  return run_impl(scenario, stats, policy, horizon, seed, FlowState::empty(scenario.num_locations()));
}

Trace run(const Scenario& scenario, const Policy& policy, long horizon, std::uint64_t seed,
          FlowState initial) {
  ChannelStats stats = build_stats(scenario);
  return run_impl(scenario, stats, policy, horizon, seed, std::move(initial));
}

std::vector<double> Trace::total_series() const {
  std::vector<double> out(horizon);
  for (long t = 0; t < horizon; ++t) {
    double s = 0.0;
    for (int k = 0; k < num_locations; ++k) s += x[t * num_locations + k];
    out[t] = s;
  }
  return out;
}

std::vector<double> Trace::location_series(int k) const {
  std::vector<double> out(horizon);
  for (long t = 0; t < horizon; ++t) out[t] = x[t * num_locations + k];
  return out;
}

std::vector<double> moving_average(const std::vector<double>& series, long window) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  const long n = static_cast<long>(series.size());
  if (n == 0) throw std::invalid_argument("empty series");
  if (window > n) {
    const double mean = std::accumulate(series.begin(), series.end(), 0.0) / n;
    return {mean};
  }
  std::vector<double> out(n);
  double acc = 0.0;
  for (long t = 0; t < n; ++t) {
    acc += series[t];
    if (t >= window) acc -= series[t - window];
    out[t] = acc / std::min<long>(t + 1, window);
  }
  return out;
}

double stability_metric(const Trace& trace, long T) {
  if (T < 1 || T > trace.horizon) throw std::invalid_argument("T out of range");
  double acc = 0.0;
  for (long t = 0; t < T; ++t) {
    for (int k = 0; k < trace.num_locations; ++k) acc += trace.x[t * trace.num_locations + k];
  }
  return acc / T;
}

SlopeFit fit_tail_slope(const std::vector<double>& series, double tail_fraction,
                        int max_points) {
  SlopeFit fit;
  const long n = static_cast<long>(series.size());
  const long start = std::max<long>(0, n - static_cast<long>(tail_fraction * n));
  const long len = n - start;
  if (len < 3) return fit;
  const long stride = std::max<long>(1, len / max_points);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long cnt = 0;
  for (long t = start; t < n; t += stride) {
    const double x = static_cast<double>(t);
    sx += x;
    sy += series[t];
    sxx += x * x;
    sxy += x * series[t];
    ++cnt;
  }
  const double denom = cnt * sxx - sx * sx;
  if (denom <= 0.0 || cnt < 3) return fit;
  fit.slope = (cnt * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.slope * sx) / cnt;
  double ss_res = 0.0;
  for (long t = start; t < n; t += stride) {
    const double r = series[t] - (intercept + fit.slope * t);
    ss_res += r * r;
  }
  fit.stderr_slope = std::sqrt(ss_res / (cnt - 2) / (sxx - sx * sx / cnt));
  fit.n = static_cast<int>(cnt);
  return fit;
}

bool diverges(const Trace& trace, const RegionOptions& opts) {
  std::vector<double> series = trace.total_series();
  if (opts.transient_cut > 0 && opts.transient_cut < trace.horizon) {
    series.erase(series.begin(), series.begin() + opts.transient_cut);
  }
  const long window = opts.window > 0 ? opts.window : std::max<long>(1, opts.horizon / 50);
  const std::vector<double> ma = moving_average(series, window);
  const SlopeFit fit = fit_tail_slope(ma, 0.5);
  return fit.slope > opts.slope_threshold;
}

std::vector<RayResult> estimate_region(const Scenario& scenario, const Policy& policy,
                                       const std::vector<std::vector<double>>& rays,
                                       const RegionOptions& opts, std::uint64_t seed) {
  const int num_loc = scenario.num_locations();
  std::vector<RayResult> results;
  results.reserve(rays.size());

  // Initial scale guess: the noninterfering critical load along the ray.
  ChannelStats stats = build_stats(scenario);
  std::vector<double> solo_rate(num_loc);
  for (int k = 0; k < num_loc; ++k) {
    SinrInputs in;
    in.stats = &stats;
    in.eta = policy.kind == PolicyKind::RandomPerSlot ? static_cast<double>(stats.num_elements())
                                                      : policy.eta_fixed;
    in.power_w = &scenario.tx_power_w;
    in.noise_w = scenario.noise_power_w;
    in.tx_counts.assign(num_loc, 0);
    in.tx_counts[k] = 1;
    solo_rate[k] = rate_bits_per_slot(sinr_closed_form(k, in), scenario.bandwidth_hz,
                                      scenario.slot_seconds) /
                   scenario.mean_file_bits[k];
  }

  std::uint64_t probe = 0;
  for (std::size_t ri = 0; ri < rays.size(); ++ri) {
    if (static_cast<int>(rays[ri].size()) != num_loc) {
      throw std::invalid_argument("ray dimension must match the location count");
    }
    Eigen::Map<const Eigen::VectorXd> d(rays[ri].data(), num_loc);
    RayResult res;
    res.direction.resize(num_loc);
    Eigen::VectorXd dir = d / d.norm();
    for (int k = 0; k < num_loc; ++k) res.direction[k] = dir(k);

    double s0 = std::numeric_limits<double>::infinity();
    for (int k = 0; k < num_loc; ++k) {
      if (dir(k) > 0.0) s0 = std::min(s0, solo_rate[k] / dir(k));
    }
    if (!std::isfinite(s0) || s0 <= 0.0) s0 = 1.0;

    auto probe_diverges = [&](double scale) {
      Scenario sc = scenario;
      for (int k = 0; k < num_loc; ++k) sc.arrival_rates[k] = scale * dir(k);
      Trace trace = run_impl(sc, stats, policy, opts.horizon,
                             derive_seed(seed, 1000 * ri + probe++), FlowState::empty(num_loc));
      return diverges(trace, opts);
    };

    // bracket the boundary
    double lo = 0.0, hi = 0.0;
    double s = s0 * 0.25;
    bool bracketed = false;
    for (int grow = 0; grow < opts.max_grow; ++grow) {
      if (probe_diverges(s)) {
        hi = s;
        bracketed = true;
        break;
      }
      lo = s;
      s *= 2.0;
    }
    if (!bracketed) {
      res.bounded = false;
      res.boundary_scale = lo;
      res.half_width = 0.0;
      results.push_back(std::move(res));
      continue;
    }

    while (hi - lo > opts.rel_tol * hi) {
      const double mid = 0.5 * (lo + hi);
      if (probe_diverges(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    res.boundary_scale = 0.5 * (lo + hi);
    res.half_width = 0.5 * (hi - lo);
    res.bounded = true;
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace riscf
