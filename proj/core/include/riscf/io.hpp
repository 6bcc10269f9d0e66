#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "riscf/fluid.hpp"
#include "riscf/flowsim.hpp"
#include "riscf/phase_opt.hpp"

namespace riscf {

/// Provenance stamped into every output file.
struct OutputMeta {
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  std::string policy;
};

/// Deterministic shortest round-trip formatting ("%.17g" would be noisy;
/// 12 significant digits are stable across runs of the same binary).
std::string format_double(double v);

void write_trace_csv(std::ostream& os, const Trace& trace, long ma_window,
                     const OutputMeta& meta);
void write_trace_csv(const std::string& path, const Trace& trace, long ma_window,
                     const OutputMeta& meta);

void write_region_csv(std::ostream& os,
                      const std::vector<std::pair<std::string, std::vector<RayResult>>>& rows,
                      const OutputMeta& meta);
void write_region_csv(const std::string& path,
                      const std::vector<std::pair<std::string, std::vector<RayResult>>>& rows,
                      const OutputMeta& meta);

void write_fluid_csv(std::ostream& os, const FluidTrajectory& traj,
                     const Eigen::VectorXd& lambda, double gamma, double eps,
                     const OutputMeta& meta);
void write_fluid_csv(const std::string& path, const FluidTrajectory& traj,
                     const Eigen::VectorXd& lambda, double gamma, double eps,
                     const OutputMeta& meta);

std::string phase_solution_json(const PhaseSolution& solution, const OutputMeta& meta);
std::string simulation_summary_json(const Trace& trace, double metric, long ma_window,
                                    const OutputMeta& meta);
std::string drift_report_json(const DriftReport& report, const OutputMeta& meta);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace riscf
