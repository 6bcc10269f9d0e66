#include "riscf/linalg.hpp"

#include <stdexcept>

namespace riscf {

bool is_hermitian(const CMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

namespace {
Eigen::SelfAdjointEigenSolver<CMatrix> eigensolve(const CMatrix& a) {
  CMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  return es;
}
}  // namespace

double min_eigenvalue(const CMatrix& a) { return eigensolve(a).eigenvalues().minCoeff(); }

double max_eigenvalue(const CMatrix& a) { return eigensolve(a).eigenvalues().maxCoeff(); }

double real_quadratic_form(const CMatrix& a, const CVector& phi) {
  if (a.rows() != phi.size() || a.cols() != phi.size()) {
    throw std::invalid_argument("quadratic form: dimension mismatch");
  }
  return (phi.adjoint() * (a * phi)).value().real();
}

CMatrix psd_factor(const CMatrix& a, double clip_tol) {
  Eigen::LLT<CMatrix> llt(0.5 * (a + a.adjoint()));
  if (llt.info() == Eigen::Success) {
    return llt.matrixL();
  }
  // Numerically semi-definite: clip small negative eigenvalues to zero.
  auto es = eigensolve(a);
  Eigen::VectorXd ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) < -clip_tol * scale) {
      throw std::runtime_error("psd_factor: matrix is indefinite");
    }
    ev(i) = std::max(ev(i), 0.0);
  }
  return es.eigenvectors() * ev.cwiseSqrt().asDiagonal();
}

CMatrix hadamard(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hadamard: dimension mismatch");
  }
  return a.cwiseProduct(b);
}

}  // namespace riscf
