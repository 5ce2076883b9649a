#pragma once

#include <vector>

#include "projlab/linalg.hpp"
#include "projlab/rng.hpp"

namespace projlab {

// A sampled pair of orthogonal projections of ranks (k, l) in dimension N.
struct ProjectionPair {
    int N = 0;
    int k = 0;
    int l = 0;
    Matrix P;
    Matrix Q;
};

// Spectral bookkeeping for PQP: n0 forced zeros, n1 forced ones, n interior
// eigenvalues, and the joint-density exponents kappa(N) = |k-l|,
// lambda(N) = |k+l-N|.
struct SpectrumParams {
    int n0 = 0;
    int n1 = 0;
    int n = 0;
    int kappaN = 0;
    int lambdaN = 0;
};

// P the fixed diagonal rank-k projection, Q = U (I_l + 0) U* with U Haar.
ProjectionPair sample_pair(int N, int k, int l, RngStream stream);

// Sorted eigenvalues of an n x n Jacobi ensemble of parameter (s, t), built
// as (A+B)^{-1/2} A (A+B)^{-1/2} from independent Wisharts with n+s and n+t
// degrees of freedom. Exact and rejection-free.
std::vector<double> sample_jacobi(int n, int s, int t, RngStream stream);

// The block pair with the same joint distribution as sample_pair: X diagonal
// with Jacobi-distributed entries, off-diagonal blocks sqrt(X(I-X)). For
// k > l the roles are swapped internally and swapped back in the output.
ProjectionPair canonical_pair(int N, int k, int l, RngStream stream);

SpectrumParams spectrum_params(int N, int k, int l);

// log of the eigenvalue-density normalization constant:
//   sum_{j=1..n} [ lgamma(j+1) + lgamma(j+kappa) + lgamma(j+lambda)
//                  - lgamma(2) - lgamma(j+n+kappa+lambda) ].
double selberg_log_z(int n, double kappa, double lambda);

}  // namespace projlab
