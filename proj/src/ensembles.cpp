#include "projlab/ensembles.hpp"

#include <algorithm>
#include <cmath>

namespace projlab {

namespace {

void check_ranks(int N, int k, int l, const char* where) {
    if (N < 1) throw dimension_error(std::string(where) + ": N must be >= 1");
    if (k < 0 || k > N || l < 0 || l > N)
        throw parameter_error(std::string(where) + ": ranks must lie in [0, N]");
}

}  // namespace

ProjectionPair sample_pair(int N, int k, int l, RngStream stream) {
    check_ranks(N, k, l, "sample_pair");
    ProjectionPair pair{N, k, l, Matrix::Zero(N, N), Matrix::Zero(N, N)};
    for (int i = 0; i < k; ++i) pair.P(i, i) = 1.0;
    if (l > 0) {
        const Matrix u = haar_unitary(N, stream);
        pair.Q = u.leftCols(l) * u.leftCols(l).adjoint();
    }
    return pair;
}

std::vector<double> sample_jacobi(int n, int s, int t, RngStream stream) {
    if (n < 1) throw parameter_error("sample_jacobi: n must be >= 1");
    if (s < 0 || t < 0)
        throw parameter_error("sample_jacobi: parameters must be non-negative");
    Rng rng(stream);
    const Matrix y = ginibre(n, n + s, rng);
    const Matrix z = ginibre(n, n + t, rng);
    const Matrix a = y * y.adjoint();
    const Matrix b = z * z.adjoint();
    const Matrix w = inv_sqrt_psd(a + b);
    Matrix j = w * a * w;
    j = 0.5 * (j + Matrix(j.adjoint()));
    const Vector eigs = hermitian_eigenvalues(j);
    return {eigs.data(), eigs.data() + eigs.size()};
}

ProjectionPair canonical_pair(int N, int k, int l, RngStream stream) {
    check_ranks(N, k, l, "canonical_pair");
    const bool swapped = k > l;
    if (swapped) std::swap(k, l);

    Matrix P = Matrix::Zero(N, N);
    Matrix Q = Matrix::Zero(N, N);
    for (int i = 0; i < k; ++i) P(i, i) = 1.0;

    auto fill_block = [&](int offset, const std::vector<double>& x) {
        const int m = static_cast<int>(x.size());
        for (int i = 0; i < m; ++i) {
            const double c = std::sqrt(std::max(x[i] * (1.0 - x[i]), 0.0));
            Q(offset + i, offset + i) = x[i];
            Q(offset + i, offset + m + i) = c;
            Q(offset + m + i, offset + i) = c;
            Q(offset + m + i, offset + m + i) = 1.0 - x[i];
        }
    };

    if (k + l <= N) {
        // blocks of sizes [k, k, l-k, N-k-l]
        const int m = k;
        if (m > 0) fill_block(0, sample_jacobi(m, l - k, N - k - l, stream));
        for (int i = 0; i < l - k; ++i) Q(2 * m + i, 2 * m + i) = 1.0;
    } else {
        // blocks of sizes [k+l-N, N-l, N-l, l-k]
        const int o = k + l - N;
        const int m = N - l;
        for (int i = 0; i < o; ++i) Q(i, i) = 1.0;
        if (m > 0) fill_block(o, sample_jacobi(m, l - k, k + l - N, stream));
        for (int i = 0; i < l - k; ++i) Q(o + 2 * m + i, o + 2 * m + i) = 1.0;
    }

    if (swapped) {
        std::swap(P, Q);
        std::swap(k, l);
    }
    return ProjectionPair{N, k, l, std::move(P), std::move(Q)};
}

SpectrumParams spectrum_params(int N, int k, int l) {
    check_ranks(N, k, l, "spectrum_params");
    SpectrumParams p;
    p.n0 = N - std::min(k, l);
    p.n1 = std::max(k + l - N, 0);
    p.n = N - p.n0 - p.n1;
    p.kappaN = std::abs(k - l);
    p.lambdaN = std::abs(k + l - N);
    return p;
}

double selberg_log_z(int n, double kappa, double lambda) {
    if (n < 1) throw parameter_error("selberg_log_z: n must be >= 1");
    if (kappa < 0.0 || lambda < 0.0)
        throw parameter_error("selberg_log_z: parameters must be non-negative");
    double total = 0.0;
    for (int j = 1; j <= n; ++j) {
        total += std::lgamma(j + 1.0) + std::lgamma(j + kappa) +
                 std::lgamma(j + lambda) - std::lgamma(2.0) -
                 std::lgamma(j + n + kappa + lambda);
    }
    return total;
}

}  // namespace projlab
