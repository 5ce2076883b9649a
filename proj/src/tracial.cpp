#include "projlab/tracial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace projlab {

TracialState from_pair(const ProjectionPair& pair, double tol) {
    const PairDecomposition d = decompose_pair(pair, tol);
    const double n = static_cast<double>(d.N);
    TracialState tau;
    tau.a11 = d.c11 / n;
    tau.a10 = d.c10 / n;
    tau.a01 = d.c01 / n;
    tau.a00 = d.c00 / n;
    tau.mu.cloud = d.interior;
    tau.mu.cloud_mass = d.interior.empty() ? 0.0 : 1.0;
    return tau;
}

std::pair<double, double> generator_traces(const TracialState& tau) {
    const double e = 0.5 * (1.0 + tau.a11 + tau.a10 - tau.a01 - tau.a00);
    const double f = 0.5 * (1.0 + tau.a11 - tau.a10 + tau.a01 - tau.a00);
    return {e, f};
}

PsiImage psi_map(const TracialState& tau) {
    const auto [alpha, beta] = generator_traces(tau);
    const double rho = tau.rho();

    SpectralMeasure mt;
    mt.atoms.push_back({0.0, 0.5 * (1.0 - tau.a11 + tau.a10 + tau.a01 + tau.a00)});
    mt.atoms.push_back({1.0, tau.a11});
    if (rho > 1e-15) {
        for (const auto& a : tau.mu.atoms) mt.atoms.push_back({a.location, rho * a.mass});
        mt.cloud = tau.mu.cloud;
        mt.cloud_mass = rho * tau.mu.cloud_mass;
    }
    mt.canonicalize();
    return {alpha, beta, std::move(mt)};
}

std::array<double, 4> freeness_atoms(double alpha, double beta) {
    if (alpha < 0.0 || alpha > 1.0 || beta < 0.0 || beta > 1.0)
        throw parameter_error("freeness_atoms: traces must lie in [0, 1]");
    return {std::max(alpha + beta - 1.0, 0.0), std::max(alpha - beta, 0.0),
            std::max(beta - alpha, 0.0), std::max(1.0 - alpha - beta, 0.0)};
}

namespace {

// Append the images of mu's atoms and cloud under a two-branch eigenvalue
// map; each branch carries mass rho.
template <class MapS, class MapT>
void push_two_branches(const TracialState& tau, SpectralMeasure& out, MapS s, MapT t) {
    const double rho = tau.rho();
    if (rho <= 1e-15) return;
    for (const auto& a : tau.mu.atoms) {
        out.atoms.push_back({s(a.location), rho * a.mass});
        out.atoms.push_back({t(a.location), rho * a.mass});
    }
    out.cloud.reserve(2 * tau.mu.cloud.size());
    for (double x : tau.mu.cloud) {
        out.cloud.push_back(s(x));
        out.cloud.push_back(t(x));
    }
    out.cloud_mass = 2.0 * rho * tau.mu.cloud_mass;
}

}  // namespace

SpectralMeasure pushforward(const TracialState& tau, const CatalogFunction& h) {
    SpectralMeasure out;
    switch (h.tag) {
        case CatalogFunction::Tag::pqp:
            return psi_map(tau).mu_tilde;
        case CatalogFunction::Tag::anticommutator: {
            out.atoms.push_back({0.0, tau.a10 + tau.a01 + tau.a00});
            out.atoms.push_back({2.0, tau.a11});
            push_two_branches(tau, out,
                              [](double t) { return t + std::sqrt(t); },
                              [](double t) { return t - std::sqrt(t); });
            break;
        }
        case CatalogFunction::Tag::linear: {
            out.atoms.push_back({0.0, tau.a00});
            out.atoms.push_back({h.a, tau.a10});
            out.atoms.push_back({h.b, tau.a01});
            out.atoms.push_back({h.a + h.b, tau.a11});
            const double a = h.a, b = h.b;
            auto disc = [a, b](double t) {
                return std::sqrt(std::max((a - b) * (a - b) + 4.0 * a * b * t, 0.0));
            };
            push_two_branches(tau, out,
                              [a, b, disc](double t) { return 0.5 * (a + b - disc(t)); },
                              [a, b, disc](double t) { return 0.5 * (a + b + disc(t)); });
            break;
        }
        case CatalogFunction::Tag::unitary_product: {
            out.atoms.push_back({0.0, tau.a11 + tau.a00});
            out.atoms.push_back({std::numbers::pi, tau.a10 + tau.a01});
            auto theta = [](double t) {
                return std::acos(std::clamp(2.0 * t - 1.0, -1.0, 1.0));
            };
            push_two_branches(tau, out, [theta](double t) { return theta(t); },
                              [theta](double t) { return -theta(t); });
            break;
        }
    }
    out.canonicalize();
    return out;
}

TracialState mix_states(const TracialState& t1, const TracialState& t2, double c) {
    if (c < 0.0 || c > 1.0) throw parameter_error("mix_states: weight must lie in [0, 1]");
    if (c == 0.0) return t2;
    if (c == 1.0) return t1;

    TracialState out;
    out.a11 = c * t1.a11 + (1.0 - c) * t2.a11;
    out.a10 = c * t1.a10 + (1.0 - c) * t2.a10;
    out.a01 = c * t1.a01 + (1.0 - c) * t2.a01;
    out.a00 = c * t1.a00 + (1.0 - c) * t2.a00;

    // total continuous mass of the mixture is c*rho1*mu1 + (1-c)*rho2*mu2;
    // representable as one equal-weight cloud only when per-point weights agree
    const double w1 = t1.mu.cloud.empty()
                          ? 0.0
                          : c * t1.rho() * t1.mu.point_mass();
    const double w2 = t2.mu.cloud.empty()
                          ? 0.0
                          : (1.0 - c) * t2.rho() * t2.mu.point_mass();
    if (!t1.mu.atoms.empty() || !t2.mu.atoms.empty())
        throw parameter_error("mix_states: atomic mu parts are not supported");
    if (w1 > 0.0 && w2 > 0.0 && std::abs(w1 - w2) > 1e-12 * std::max(w1, w2))
        throw parameter_error("mix_states: incompatible per-point cloud weights");

    out.mu.cloud = t1.mu.cloud;
    out.mu.cloud.insert(out.mu.cloud.end(), t2.mu.cloud.begin(), t2.mu.cloud.end());
    std::sort(out.mu.cloud.begin(), out.mu.cloud.end());
    out.mu.cloud_mass = out.mu.cloud.empty() ? 0.0 : 1.0;
    return out;
}

}  // namespace projlab
