#include "projlab/linalg.hpp"

#include <cmath>

namespace projlab {

double hermitian_residual(const Matrix& m) {
    return (m - m.adjoint()).norm();
}

double unitary_residual(const Matrix& m) {
    return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm();
}

double projection_residual(const Matrix& m) {
    return std::max((m * m - m).norm(), hermitian_residual(m));
}

bool is_hermitian(const Matrix& m, double tol) {
    return m.rows() == m.cols() && hermitian_residual(m) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
    return m.rows() == m.cols() && unitary_residual(m) <= tol;
}

bool is_projection(const Matrix& m, double tol) {
    return m.rows() == m.cols() && projection_residual(m) <= tol;
}

Complex trace_normalized(const Matrix& m) {
    return m.trace() / static_cast<double>(m.rows());
}

namespace {

void require_hermitian(const Matrix& m, const char* where) {
    if (m.rows() != m.cols())
        throw shape_error(std::string(where) + ": matrix must be square");
    const double res = hermitian_residual(m);
    // scale the structural tolerance with the matrix norm for large inputs
    const double bound = tol::structural * std::max(1.0, m.norm());
    if (res > bound)
        throw shape_error(std::string(where) + ": input is not Hermitian, residual " +
                          std::to_string(res));
}

}  // namespace

Vector hermitian_eigenvalues(const Matrix& m) {
    require_hermitian(m, "hermitian_eigenvalues");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw numeric_error("hermitian_eigenvalues: iteration failed to converge",
                            hermitian_residual(m));
    return es.eigenvalues();
}

EigenSystem hermitian_eigensystem(const Matrix& m) {
    require_hermitian(m, "hermitian_eigensystem");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success)
        throw numeric_error("hermitian_eigensystem: iteration failed to converge",
                            hermitian_residual(m));
    return {es.eigenvalues(), es.eigenvectors()};
}

Matrix inv_sqrt_psd(const Matrix& m) {
    const EigenSystem es = hermitian_eigensystem(m);
    const double largest = std::max(std::abs(es.values(0)),
                                    std::abs(es.values(es.values.size() - 1)));
    const double floor = static_cast<double>(m.rows()) * 1e-12 * largest;
    if (es.values(0) <= floor)
        throw numeric_error("inv_sqrt_psd: matrix is singular or indefinite",
                            es.values(0));
    Vector d = es.values.cwiseSqrt().cwiseInverse();
    Matrix s = es.vectors * d.asDiagonal() * es.vectors.adjoint();
    // kill roundoff asymmetry
    return 0.5 * (s + Matrix(s.adjoint()));
}

}  // namespace projlab
