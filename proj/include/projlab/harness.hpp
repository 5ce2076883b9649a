#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "projlab/measure.hpp"

namespace projlab {

struct CheckRecord {
    std::string name;
    double statistic = 0.0;
    double threshold = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    bool pass = false;  // conjunction of per-check passes
    double duration_seconds = 0.0;
    std::vector<CheckRecord> checks;
};

struct SuiteConfig {
    int threads = 1;
};

// sup over sample points of |empirical CDF - cdf|, both one-sided jumps.
double ks_distance(std::span<const double> sorted_cloud,
                   const std::function<double(double)>& cdf);

// Verification suites, one per acceptance criterion:
//   selberg      exact normalization vs brute-force quadrature, n <= 3
//   b_limit      (1/N^2) log Z(N) converging to rho^2 B(kappa/rho, lambda/rho)
//   structure    Haar route vs Wishart-Jacobi canonical route, mixed moments
//   freeness     PQP spectrum at N=512 vs the closed-form minimizer law
//   rate_min     rate functional vanishing at the minimizer discretization
//   contraction  pushforward of the extracted state == empirical spectrum
//   moments      tr (PQ)^k == tr (PQP)^k and E tr_N(PQ) = kl/N^2
//   unitary_law  eigenvalue angles of exp(i pi P) exp(-i pi Q) vs circle law
const std::vector<std::string>& suite_names();

// Deterministic given (config, master_seed); unknown names throw
// parameter_error.
VerificationReport run_suite(std::string_view name, const SuiteConfig& config,
                             std::uint64_t master_seed);

// Sorted-measure comparison used by the contraction suite: cloud points
// within tol of a declared atom location are first absorbed on both sides,
// then atoms and clouds are compared entrywise. Returns the max deviation.
double measure_deviation(SpectralMeasure a, SpectralMeasure b,
                         std::span<const double> atom_locations, double tol);

}  // namespace projlab
