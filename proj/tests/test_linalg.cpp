#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "projlab/rng.hpp"

using namespace projlab;

namespace {

Matrix two_by_two_projection(double t) {
    const double c = std::sqrt(t * (1.0 - t));
    Matrix f(2, 2);
    f << t, c, c, 1.0 - t;
    return f;
}

}  // namespace

TEST_CASE("eigenvalues of simple Hermitian matrices") {
    CHECK(hermitian_eigenvalues(Matrix::Identity(3, 3)).isApproxToConstant(1.0, 1e-14));

    Matrix d = Matrix::Zero(2, 2);
    d(1, 1) = 1.0;
    const Vector e = hermitian_eigenvalues(d);
    CHECK(e(0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(e(1) == doctest::Approx(1.0).epsilon(1e-14));

    // f(t) is a projection, so its spectrum is {0, 1}
    const Vector ef = hermitian_eigenvalues(two_by_two_projection(0.3));
    CHECK(std::abs(ef(0)) <= 1e-12);
    CHECK(std::abs(ef(1) - 1.0) <= 1e-12);
}

TEST_CASE("eigensystem reconstructs the matrix") {
    Rng rng({21, 0});
    const Matrix g = ginibre(24, 24, rng);
    const Matrix m = 0.5 * (g + Matrix(g.adjoint()));
    const EigenSystem es = hermitian_eigensystem(m);
    const Matrix rebuilt =
        es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
    CHECK((m - rebuilt).norm() <= 1e-9 * m.norm());
    CHECK(is_unitary(es.vectors, 1e-12 * 24));

    // eigenvalue sum equals the trace
    CHECK(std::abs(es.values.sum() - m.trace().real()) <= 1e-9 * 24 * m.norm());
}

TEST_CASE("non-Hermitian input is rejected") {
    Matrix m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(hermitian_eigenvalues(m), shape_error);
    CHECK_THROWS_AS(hermitian_eigenvalues(Matrix::Zero(2, 3)), shape_error);
}

TEST_CASE("inverse square root on exact inputs") {
    CHECK((inv_sqrt_psd(Matrix::Identity(3, 3)) - Matrix::Identity(3, 3)).norm() <= 1e-12);

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    const Matrix s = inv_sqrt_psd(d);
    CHECK(std::abs(s(0, 0) - 0.5) <= 1e-12);
    CHECK(std::abs(s(1, 1) - 1.0 / 3.0) <= 1e-12);
}

TEST_CASE("inverse square root residual on a Wishart sum") {
    Rng rng({77, 0});
    const Matrix y = ginibre(20, 25, rng);
    const Matrix z = ginibre(20, 30, rng);
    const Matrix m = y * y.adjoint() + z * z.adjoint();
    const Matrix s = inv_sqrt_psd(m);
    CHECK((s * m * s - Matrix::Identity(20, 20)).norm() <= 1e-8);
}

TEST_CASE("singular input to inv_sqrt_psd fails") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    CHECK_THROWS_AS(inv_sqrt_psd(d), numeric_error);
}

TEST_CASE("structural predicates") {
    CHECK(is_projection(two_by_two_projection(0.7), 1e-12));
    CHECK(is_hermitian(Matrix::Identity(4, 4)));
    Matrix m(2, 2);
    m << 1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 1.0;
    CHECK(!is_hermitian(m, 1e-10));
}
