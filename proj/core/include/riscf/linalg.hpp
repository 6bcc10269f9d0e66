#pragma once

#include <Eigen/Dense>
#include <complex>

namespace riscf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

bool is_hermitian(const CMatrix& a, double tol = 1e-9);

/// Smallest/largest eigenvalue of a Hermitian matrix (input symmetrized).
double min_eigenvalue(const CMatrix& a);
double max_eigenvalue(const CMatrix& a);

/// Re(phi^H a phi). For Hermitian `a` the form is real up to roundoff.
double real_quadratic_form(const CMatrix& a, const CVector& phi);

/// Factor L with L L^H = a. Cholesky first; for numerically semi-definite
/// inputs falls back to an eigendecomposition with negative eigenvalues
/// clipped to zero. Throws std::runtime_error if `a` is indefinite beyond
/// the clipping tolerance.
CMatrix psd_factor(const CMatrix& a, double clip_tol = 1e-12);

/// Elementwise (Hadamard) product.
CMatrix hadamard(const CMatrix& a, const CMatrix& b);

}  // namespace riscf
