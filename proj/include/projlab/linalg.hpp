#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "projlab/constants.hpp"
#include "projlab/errors.hpp"

namespace projlab {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;
using Complex = std::complex<double>;

double hermitian_residual(const Matrix& m);   // ||M - M*||_F
double unitary_residual(const Matrix& m);     // ||M*M - I||_F
double projection_residual(const Matrix& m);  // max(||M^2 - M||_F, ||M - M*||_F)

bool is_hermitian(const Matrix& m, double tol = tol::structural);
bool is_unitary(const Matrix& m, double tol = tol::structural);
bool is_projection(const Matrix& m, double tol = tol::structural);

// Normalized trace tr_N = Tr/N.
Complex trace_normalized(const Matrix& m);

struct EigenSystem {
    Vector values;    // ascending
    Matrix vectors;   // unitary, columns are eigenvectors
};

// Eigenvalues of a Hermitian matrix, ascending. Throws shape_error on
// non-Hermitian input and numeric_error if the iteration fails.
Vector hermitian_eigenvalues(const Matrix& m);
EigenSystem hermitian_eigensystem(const Matrix& m);

// S with ||S*M*S - I||_F <= tol::composite for Hermitian positive definite M.
// Throws numeric_error when the smallest eigenvalue is below
// dim * 1e-12 * ||M||.
Matrix inv_sqrt_psd(const Matrix& m);

}  // namespace projlab
