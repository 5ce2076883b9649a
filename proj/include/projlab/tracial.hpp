#pragma once

#include <array>
#include <utility>

#include "projlab/spectra.hpp"

namespace projlab {

// Parameterization of a tracial state on the universal two-projection
// algebra: four corner masses plus a measure mu on (0,1). mu is a
// probability measure (atoms inside (0,1) allowed, typically a pure cloud);
// it is irrelevant when the corner masses sum to 1.
struct TracialState {
    double a11 = 0.0;
    double a10 = 0.0;
    double a01 = 0.0;
    double a00 = 0.0;
    SpectralMeasure mu;

    double alpha_sum() const { return a11 + a10 + a01 + a00; }
    double rho() const { return 0.5 * (1.0 - alpha_sum()); }
};

// Extract the state of a matrix pair: corner masses from eigenvalue counts
// near 1 of the four corner matrices, mu from the interior PQP spectrum.
TracialState from_pair(const ProjectionPair& pair, double tol = tol::atom);

// (tau(e), tau(f)) = ((1 + a11 + a10 - a01 - a00)/2, (1 + a11 - a10 + a01 - a00)/2).
std::pair<double, double> generator_traces(const TracialState& tau);

// The affine homeomorphism Psi: tau -> (tau(e), tau(f), distribution of efe).
struct PsiImage {
    double alpha = 0.0;
    double beta = 0.0;
    SpectralMeasure mu_tilde;
};

PsiImage psi_map(const TracialState& tau);

// Corner masses of a pair of free projections with traces (alpha, beta):
// {a11, a10, a01, a00}.
std::array<double, 4> freeness_atoms(double alpha, double beta);

// Distribution of h under tau. Exact at finite N: applied to from_pair(P,Q)
// it reproduces the empirical spectrum of h(P,Q).
SpectralMeasure pushforward(const TracialState& tau, const CatalogFunction& h);

// Convex combination c*t1 + (1-c)*t2 on the parameterization. The mixed mu
// must remain an equal-weight cloud, so the per-point weights of the two
// continuous parts have to agree.
TracialState mix_states(const TracialState& t1, const TracialState& t2, double c);

}  // namespace projlab
