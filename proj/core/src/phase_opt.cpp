#include "riscf/phase_opt.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace riscf {

namespace {

std::atomic<std::uint64_t> g_optimize_calls{0};

double bm_objective(const CMatrix& r, const CMatrix& v) {
  // tr(R V V^H) = Re <V, R V>_F for Hermitian R
  return (r * v).cwiseProduct(v.conjugate()).sum().real();
}

void normalize_rows(CMatrix& v) {
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const double n = v.row(i).norm();
    if (n > 0.0) v.row(i) /= n;
  }
}

double power_iteration_lmax(const CMatrix& r, Rng& rng, int iters = 60) {
  CVector x = complex_gaussian_vector(static_cast<int>(r.rows()), rng);
  x.normalize();
  double lambda = 1.0;
  for (int it = 0; it < iters; ++it) {
    CVector y = r * x;
    lambda = y.norm();
    if (lambda <= 0.0) return 1.0;
    x = y / lambda;
  }
  return lambda;
}

double wrap_angle(double t) {
  const double two_pi = 2.0 * M_PI;
  t = std::fmod(t, two_pi);
  if (t < 0.0) t += two_pi;
  return t;
}

double snap_angle(double t, int levels) {
  const double step = 2.0 * M_PI / levels;
  return wrap_angle(step * std::round(t / step));
}

}  // namespace

std::string to_string(PhaseMode mode) {
  switch (mode) {
    case PhaseMode::Continuous: return "continuous";
    case PhaseMode::Discrete: return "discrete";
    case PhaseMode::Equal: return "equal";
    case PhaseMode::Random: return "random";
  }
  return "unknown";
}

SdpSolution solve_sdp(const CMatrix& r, const SdpOptions& opts) {
  const int m = static_cast<int>(r.rows());
  if (m < 1 || r.cols() != m) throw std::invalid_argument("SDP input must be square");
  if (!is_hermitian(r, 1e-8)) throw std::invalid_argument("SDP input must be Hermitian");
  const CMatrix rs = 0.5 * (r + r.adjoint());

  // Low-rank factorization Phi = V V^H; the unit-diagonal constraint is row
  // normalization. At rank ceil(sqrt(2M)) + 1 the factorized problem admits
  // exact optima of the SDP.
  const int p = opts.rank > 0 ? opts.rank
                              : static_cast<int>(std::ceil(std::sqrt(2.0 * m))) + 1;
  Rng rng = make_rng(opts.seed);
  CMatrix v(m, p);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j) v(i, j) = standard_complex_gaussian(rng);
  }
  normalize_rows(v);

  const double lmax = std::max(power_iteration_lmax(rs, rng), 1e-12);
  double step = 1.0 / lmax;
  const double step_cap = 16.0 / lmax;

  double obj = bm_objective(rs, v);
  double rel = std::numeric_limits<double>::infinity();
  int it = 0;
  bool converged = false;
  CMatrix candidate(m, p);
  for (; it < opts.max_iterations; ++it) {
    candidate = v + step * (rs * v);
    normalize_rows(candidate);
    const double cand_obj = bm_objective(rs, candidate);
    if (cand_obj < obj) {
      step *= 0.5;
      if (step < 1e-12 / lmax) break;
      continue;
    }
    rel = (cand_obj - obj) / std::max(1.0, std::abs(cand_obj));
    v.swap(candidate);
    obj = cand_obj;
    if (rel < opts.rel_tol) {
      converged = true;
      break;
    }
    step = std::min(step * 1.05, step_cap);
  }

  SdpSolution out;
  out.phi_star = v * v.adjoint();
  out.objective = obj;
  out.iterations = it;
  out.final_rel_change = rel;
  out.converged = converged;
  return out;
}

PhaseConfig gaussian_randomization(const SdpSolution& sdp, const CMatrix& r,
                                   int n_rand, Rng& rng, int levels) {
  if (n_rand < 1) throw std::invalid_argument("need at least one randomization");
  if (levels == 1 || levels < 0) throw std::invalid_argument("levels must be 0 or >= 2");
  const int m = static_cast<int>(r.rows());

  Eigen::SelfAdjointEigenSolver<CMatrix> es(sdp.phi_star);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  const CMatrix factor = es.eigenvectors() * ev.cwiseSqrt().asDiagonal();

  Eigen::VectorXd best_theta(m);
  double best = -1.0;
  CVector z(m), phi_bar(m), phi(m);
  Eigen::VectorXd theta(m);
  for (int draw = 0; draw < n_rand; ++draw) {
    fill_complex_gaussian(z, rng);
    phi_bar.noalias() = factor * z;
    for (int i = 0; i < m; ++i) {
      double t = wrap_angle(std::arg(phi_bar(i)));  // arg(0) = 0
      if (levels >= 2) t = snap_angle(t, levels);
      theta(i) = t;
      phi(i) = std::polar(1.0, t);
    }
    const double val = real_quadratic_form(r, phi);
    if (val > best) {
      best = val;
      best_theta = theta;
    }
  }
  return PhaseConfig::from_angles(best_theta);
}

PhaseConfig quantize_phases(const PhaseConfig& phase, int levels) {
  if (levels < 2) throw std::invalid_argument("quantization needs at least two levels");
  Eigen::VectorXd theta(phase.theta.size());
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    theta(i) = snap_angle(phase.theta(i), levels);
  }
  return PhaseConfig::from_angles(theta);
}

PhaseConfig equal_phase_config(int num_elements) {
  if (num_elements < 1) throw std::invalid_argument("need at least one element");
  return PhaseConfig::from_angles(Eigen::VectorXd::Zero(num_elements));
}

PhaseConfig random_phases(int num_elements, Rng& rng) {
  if (num_elements < 1) throw std::invalid_argument("need at least one element");
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * M_PI);
  Eigen::VectorXd theta(num_elements);
  for (int i = 0; i < num_elements; ++i) theta(i) = uniform(rng);
  return PhaseConfig::from_angles(theta);
}

BruteForceResult brute_force_opt(const CMatrix& r, int levels, std::uint64_t budget) {
  const int m = static_cast<int>(r.rows());
  if (m < 1 || r.cols() != m) throw std::invalid_argument("square matrix required");
  if (levels < 2) throw std::invalid_argument("need at least two levels");

  double combos = 1.0;
  for (int i = 1; i < m; ++i) {
    combos *= levels;
    if (combos > static_cast<double>(budget)) {
      throw std::length_error("brute force enumeration budget exceeded");
    }
  }

  std::vector<Complex> alphabet(levels);
  for (int l = 0; l < levels; ++l) alphabet[l] = std::polar(1.0, 2.0 * M_PI * l / levels);

  std::vector<int> idx(m, 0);       // idx[0] stays 0
  std::vector<CVector> partial(m);  // partial[d] = sum_{j<=d} R[:,j] phi_j
  partial[0] = r.col(0) * alphabet[0];
  for (int d = 1; d < m; ++d) partial[d] = partial[d - 1] + r.col(d) * alphabet[0];

  CVector phi(m);
  std::vector<int> best_idx = idx;
  double best = -std::numeric_limits<double>::infinity();
  for (;;) {
    // evaluate eta = Re(phi^H w) at the leaf
    Complex acc(0.0, 0.0);
    const CVector& w = partial[m - 1];
    for (int i = 0; i < m; ++i) acc += std::conj(alphabet[idx[i]]) * w(i);
    if (acc.real() > best) {
      best = acc.real();
      best_idx = idx;
    }
    // odometer over positions 1..m-1
    int d = m - 1;
    while (d >= 1 && idx[d] == levels - 1) idx[d--] = 0;
    if (d < 1) break;
    ++idx[d];
    // rebuild partial sums from depth d
    for (int e = d; e < m; ++e) {
      partial[e] = partial[e - 1] + r.col(e) * alphabet[idx[e]];
    }
  }

  Eigen::VectorXd theta(m);
  for (int i = 0; i < m; ++i) theta(i) = 2.0 * M_PI * best_idx[i] / levels;
  BruteForceResult out;
  out.phase = PhaseConfig::from_angles(theta);
  out.eta = std::max(best, 0.0);
  return out;
}

PhaseSolution optimize(const CMatrix& r, const OptimizeOptions& opts, Rng& rng) {
  g_optimize_calls.fetch_add(1, std::memory_order_relaxed);
  const int m = static_cast<int>(r.rows());
  if (m < 1 || r.cols() != m) throw std::invalid_argument("square matrix required");
  const double lmax = max_eigenvalue(r);
  const double spectral_upper = m * lmax;

  PhaseSolution out;
  const bool shortcut = opts.correlations_equal && opts.mode != PhaseMode::Random;
  if (opts.mode == PhaseMode::Equal || shortcut) {
    // With r_t = r_r any equal phase configuration is the exact maximizer.
    out.phase = equal_phase_config(m);
    out.mode = PhaseMode::Equal;
    out.sdp_upper = spectral_upper;
  } else if (opts.mode == PhaseMode::Random) {
    out.phase = random_phases(m, rng);
    out.mode = PhaseMode::Random;
    out.sdp_upper = spectral_upper;
  } else {
    if (opts.mode == PhaseMode::Discrete && opts.levels < 2) {
      throw std::invalid_argument("discrete mode needs levels >= 2");
    }
    out.sdp = solve_sdp(r, opts.sdp);
    const int levels = opts.mode == PhaseMode::Discrete ? opts.levels : 0;
    out.phase = gaussian_randomization(out.sdp, r, opts.n_randomizations, rng, levels);
    out.mode = opts.mode;
    // Conservative even if the solver stalls: tr(R Phi) <= M lambda_max(R)
    // for every feasible Phi.
    out.sdp_upper = std::min(out.sdp.objective, spectral_upper);
  }
  out.eta_achieved = eta_value(out.phase.phi, r);
  out.gamma_certified = out.eta_achieved / out.sdp_upper;
  return out;
}

std::uint64_t optimize_call_count() {
  return g_optimize_calls.load(std::memory_order_relaxed);
}

}  // namespace riscf
