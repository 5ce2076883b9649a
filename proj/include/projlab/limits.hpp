#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "projlab/measure.hpp"
#include "projlab/spectra.hpp"

namespace projlab {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Closed-form limiting eigenvalue law: atoms plus a density on an explicit
// support, evaluable pointwise and by quantiles. Angle-valued laws (the
// unitary product) live on (-pi, pi] and set circular.
struct LimitLaw {
    std::vector<Atom> atoms;
    std::vector<Interval> support;  // disjoint, ascending
    double continuous_mass = 0.0;
    bool circular = false;

    // density of the law itself: integrates to continuous_mass over support
    double density(double x) const;
    // CDF of the normalized continuous part, in [0, 1]
    double cdf(double x) const;
    // quantile of the normalized continuous part, u in (0, 1)
    double quantile(double u) const;

    std::function<double(double)> density_fn;
    std::function<double(double)> cdf_fn;
};

// The PQP minimizer law: atoms (1 - min{a,b}) d_0 and max{a+b-1, 0} d_1 plus
// density sqrt((x-xi)(eta-x)) / (2 pi x (1-x)) on (xi, eta) with
// xi, eta = a + b - 2ab -+ sqrt(4ab(1-a)(1-b)). Purely atomic when rho = 0.
LimitLaw minimizer_pqp(double alpha, double beta);

// Minimizer law of h(P,Q) for each catalog function, obtained by pushing the
// PQP law through the structure-theorem eigenvalue maps.
LimitLaw minimizer_for(const CatalogFunction& h, double alpha, double beta);

// Atoms copied, n cloud points at the (i - 1/2)/n quantiles of the
// normalized continuous part. Requires n >= 2; a law with zero continuous
// mass gives an empty cloud.
SpectralMeasure quantile_cloud(const LimitLaw& law, int n);

// Edge endpoints xi, eta of the PQP minimizer's continuous support.
std::pair<double, double> minimizer_edges(double alpha, double beta);

}  // namespace projlab
