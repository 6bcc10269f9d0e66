#pragma once

#include <cstdint>
#include <string>

#include "riscf/linalg.hpp"
#include "riscf/rng.hpp"
#include "riscf/sinr.hpp"

namespace riscf {

struct SdpOptions {
  int max_iterations = 5000;
  double rel_tol = 1e-8;
  int rank = 0;  // 0: ceil(sqrt(2M)) + 1
  std::uint64_t seed = 0x6a09e667f3bcc908ull;
};

/// Solution of the diagonal-constrained SDP relaxation
///   maximize tr(R Phi)  s.t.  Phi PSD, Phi_ii = 1,
/// solved by low-rank factorization Phi = V V^H with unit-norm rows of V.
struct SdpSolution {
  CMatrix phi_star;
  double objective = 0.0;
  int iterations = 0;
  double final_rel_change = 0.0;
  bool converged = false;
};

SdpSolution solve_sdp(const CMatrix& r, const SdpOptions& opts = {});

/// Draws candidates phi_bar = U Sigma^{1/2} z from the SDP solution,
/// projects each entry to unit modulus (or to the L-level grid when
/// levels >= 2) and returns the candidate with the largest phi^H R phi.
PhaseConfig gaussian_randomization(const SdpSolution& sdp, const CMatrix& r,
                                   int n_rand, Rng& rng, int levels = 0);

/// Snaps each phase to the nearest multiple of 2pi/levels.
PhaseConfig quantize_phases(const PhaseConfig& phase, int levels);

PhaseConfig equal_phase_config(int num_elements);

PhaseConfig random_phases(int num_elements, Rng& rng);

/// Exact maximizer of phi^H R phi over the discrete alphabet
/// {1, w, ..., w^{L-1}}^M. The first phase is pinned to 0 (a global
/// rotation keeps grid vectors on the grid and leaves eta unchanged),
/// so the enumeration size is L^(M-1); it must not exceed `budget`.
struct BruteForceResult {
  PhaseConfig phase;
  double eta = 0.0;
};

BruteForceResult brute_force_opt(const CMatrix& r, int levels,
                                 std::uint64_t budget = (1ull << 24));

enum class PhaseMode { Continuous, Discrete, Equal, Random };

std::string to_string(PhaseMode mode);

struct OptimizeOptions {
  PhaseMode mode = PhaseMode::Continuous;
  int levels = 0;              // Discrete mode only
  int n_randomizations = 1000;
  bool correlations_equal = false;  // short-circuit to the equal-phase optimum
  SdpOptions sdp;
};

/// A phase design with its certificate: eta achieved, the relaxation upper
/// bound, and gamma = eta / upper.
struct PhaseSolution {
  PhaseConfig phase;
  double eta_achieved = 0.0;
  double sdp_upper = 0.0;
  double gamma_certified = 0.0;
  PhaseMode mode = PhaseMode::Continuous;
  SdpSolution sdp;  // empty for Equal/Random modes
};

PhaseSolution optimize(const CMatrix& r, const OptimizeOptions& opts, Rng& rng);

/// Number of optimize() invocations since process start (diagnostics; used
/// to assert that simulations never re-solve per slot).
std::uint64_t optimize_call_count();

}  // namespace riscf
