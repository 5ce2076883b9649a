#include "projlab/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "projlab/quadrature.hpp"
#include "projlab/rate.hpp"

namespace projlab {

namespace {

constexpr double pi = std::numbers::pi;

// Continuous part of the PQP minimizer with a tabulated CDF. The density has
// square-root or inverse-square-root edges; the substitution
// t = mid + half*sin(u) removes both, so panelwise Gauss-Legendre in u is
// accurate to machine precision.
struct PqpCore {
    double xi = 0.0;
    double eta = 1.0;
    double rho = 0.0;
    std::vector<double> cum;  // cumulative mass at panel edges in u-space
    double total = 0.0;
    int panels = 0;

    double mid() const { return 0.5 * (xi + eta); }
    double half() const { return 0.5 * (eta - xi); }

    // unnormalized density, integrates to rho over (xi, eta)
    double density(double t) const {
        if (t <= xi || t >= eta) return 0.0;
        const double rad = std::max((t - xi) * (eta - t), 0.0);
        return std::sqrt(rad) / (2.0 * pi * t * (1.0 - t));
    }

    double integrand_u(double u) const {
        const double t = mid() + half() * std::sin(u);
        const double c = half() * std::cos(u);
        return c * c / (2.0 * pi * t * (1.0 - t));
    }

    // normalized CDF of the continuous part
    double cdf(double t) const {
        if (t <= xi) return 0.0;
        if (t >= eta) return 1.0;
        const double u = std::asin(std::clamp((t - mid()) / half(), -1.0, 1.0));
        const double h = pi / panels;
        const double pos = (u + 0.5 * pi) / h;
        int idx = std::clamp(static_cast<int>(pos), 0, panels - 1);
        const double lo = -0.5 * pi + idx * h;
        double part = integrate_gl([this](double v) { return integrand_u(v); }, lo, u, gl16());
        return std::clamp((cum[idx] + part) / total, 0.0, 1.0);
    }

    double quantile(double u) const {
        double lo = xi, hi = eta;
        for (int i = 0; i < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(hi)); ++i) {
            const double m = 0.5 * (lo + hi);
            (cdf(m) < u ? lo : hi) = m;
        }
        return 0.5 * (lo + hi);
    }
};

std::shared_ptr<const PqpCore> make_pqp_core(double alpha, double beta) {
    const RateParams p = rate_params(alpha, beta);
    if (p.rho <= 1e-14) return nullptr;
    auto core = std::make_shared<PqpCore>();
    const double root = std::sqrt(std::max(
        4.0 * alpha * beta * (1.0 - alpha) * (1.0 - beta), 0.0));
    const double center = alpha + beta - 2.0 * alpha * beta;
    core->xi = std::clamp(center - root, 0.0, 1.0);
    core->eta = std::clamp(center + root, 0.0, 1.0);
    core->rho = p.rho;
    core->panels = 256;
    core->cum.assign(core->panels + 1, 0.0);
    const double h = pi / core->panels;
    for (int i = 0; i < core->panels; ++i) {
        const double a = -0.5 * pi + i * h;
        core->cum[i + 1] = core->cum[i] +
            integrate_gl([&core](double v) { return core->integrand_u(v); }, a, a + h, gl16());
    }
    core->total = core->cum[core->panels];
    return core;
}

void push_atom(std::vector<Atom>& atoms, double loc, double mass) {
    if (mass <= 1e-15) return;
    for (auto& a : atoms) {
        if (std::abs(a.location - loc) <= tol::atom_merge) {
            a.mass += mass;
            return;
        }
    }
    atoms.push_back({loc, mass});
}

void finish_atoms(LimitLaw& law) {
    std::sort(law.atoms.begin(), law.atoms.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
}

}  // namespace

double LimitLaw::density(double x) const {
    return density_fn ? density_fn(x) : 0.0;
}

double LimitLaw::cdf(double x) const {
    return cdf_fn ? cdf_fn(x) : 0.0;
}

double LimitLaw::quantile(double u) const {
    if (support.empty() || !cdf_fn)
        throw parameter_error("LimitLaw::quantile: law has no continuous part");
    if (u <= 0.0 || u >= 1.0)
        throw parameter_error("LimitLaw::quantile: u must lie in (0, 1)");
    double lo = support.front().lo;
    double hi = support.back().hi;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi) + std::abs(lo)); ++i) {
        const double m = 0.5 * (lo + hi);
        (cdf_fn(m) < u ? lo : hi) = m;
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> minimizer_edges(double alpha, double beta) {
    const double root =
        std::sqrt(std::max(4.0 * alpha * beta * (1.0 - alpha) * (1.0 - beta), 0.0));
    const double center = alpha + beta - 2.0 * alpha * beta;
    return {std::clamp(center - root, 0.0, 1.0), std::clamp(center + root, 0.0, 1.0)};
}

LimitLaw minimizer_pqp(double alpha, double beta) {
    const RateParams p = rate_params(alpha, beta);
    LimitLaw law;
    push_atom(law.atoms, 0.0, 1.0 - std::min(alpha, beta));
    push_atom(law.atoms, 1.0, std::max(alpha + beta - 1.0, 0.0));
    finish_atoms(law);

    auto core = make_pqp_core(alpha, beta);
    if (!core) return law;

    law.support = {{core->xi, core->eta}};
    law.continuous_mass = p.rho;
    law.density_fn = [core](double x) { return core->density(x); };
    law.cdf_fn = [core](double x) { return core->cdf(x); };
    return law;
}

namespace {

LimitLaw anticommutator_law(double alpha, double beta) {
    const RateParams p = rate_params(alpha, beta);
    LimitLaw law;
    push_atom(law.atoms, 0.0,
              std::max({std::abs(alpha - beta), 1.0 - 2.0 * alpha, 1.0 - 2.0 * beta}));
    push_atom(law.atoms, 2.0, std::max(alpha + beta - 1.0, 0.0));
    finish_atoms(law);

    auto core = make_pqp_core(alpha, beta);
    if (!core) return law;
    const double xi = core->xi, eta = core->eta;

    auto S = [](double t) { return t + std::sqrt(t); };
    auto T = [](double t) { return t - std::sqrt(t); };

    // negative side is the image of T, two-to-one around its minimum at 1/4
    Interval neg;
    if (eta <= 0.25) neg = {T(eta), T(xi)};
    else if (xi >= 0.25) neg = {T(xi), T(eta)};
    else neg = {-0.25, std::max(T(xi), T(eta))};
    law.support = {neg, {S(xi), S(eta)}};
    law.continuous_mass = 2.0 * p.rho;

    law.density_fn = [core, xi, eta](double y) {
        double g = 0.0;
        if (y > 0.0) {
            const double s = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * y));
            const double t = s * s;
            if (t > xi && t < eta) g += core->density(t) * 2.0 * s / std::sqrt(1.0 + 4.0 * y);
        } else if (y > -0.25 && y < 0.0) {
            const double r = std::sqrt(1.0 + 4.0 * y);
            for (double s : {0.5 * (1.0 - r), 0.5 * (1.0 + r)}) {
                const double t = s * s;
                if (t > xi && t < eta) g += core->density(t) * 2.0 * s / r;
            }
        }
        return g;
    };
    law.cdf_fn = [core](double y) {
        double s_part;  // P{ t + sqrt(t) <= y }
        if (y <= 0.0) s_part = 0.0;
        else {
            const double s = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * y));
            s_part = core->cdf(s * s);
        }
        double t_part;  // P{ t - sqrt(t) <= y }
        if (y >= 0.0) t_part = 1.0;
        else if (y < -0.25) t_part = 0.0;
        else {
            const double r = std::sqrt(std::max(1.0 + 4.0 * y, 0.0));
            const double t_lo = 0.25 * (1.0 - r) * (1.0 - r);
            const double t_hi = 0.25 * (1.0 + r) * (1.0 + r);
            t_part = core->cdf(t_hi) - core->cdf(t_lo);
        }
        return 0.5 * (s_part + t_part);
    };
    return law;
}

LimitLaw linear_law(double a, double b, double alpha, double beta) {
    const RateParams p = rate_params(alpha, beta);
    LimitLaw law;
    push_atom(law.atoms, 0.0, std::max(1.0 - alpha - beta, 0.0));
    push_atom(law.atoms, a, std::max(alpha - beta, 0.0));
    push_atom(law.atoms, b, std::max(beta - alpha, 0.0));
    push_atom(law.atoms, a + b, std::max(alpha + beta - 1.0, 0.0));
    finish_atoms(law);

    auto core = make_pqp_core(alpha, beta);
    if (!core) return law;
    const double xi = core->xi, eta = core->eta;
    const double ab = a * b;

    auto disc = [a, b](double t) {
        return std::sqrt(std::max((a - b) * (a - b) + 4.0 * a * b * t, 0.0));
    };
    const double lowA = 0.5 * (a + b - disc(eta));  // A0 before the ab-sign swap
    const double lowB = 0.5 * (a + b - disc(xi));
    Interval first{std::min(lowA, lowB), std::max(lowA, lowB)};
    Interval second{a + b - first.hi, a + b - first.lo};
    if (second.lo < first.lo) std::swap(first, second);
    law.support = {first, second};
    law.continuous_mass = 2.0 * p.rho;

    auto t_of = [a, b, ab](double y) { return (y - a) * (y - b) / ab; };
    law.density_fn = [core, xi, eta, a, b, ab, t_of](double y) {
        const double t = t_of(y);
        if (t <= xi || t >= eta) return 0.0;
        return core->density(t) * std::abs(2.0 * y - (a + b)) / std::abs(ab);
    };

    // branch probabilities: S decreasing and T increasing when ab > 0
    const bool s_decreasing = ab > 0.0;
    const double s_lo = std::min(0.5 * (a + b - disc(xi)), 0.5 * (a + b - disc(eta)));
    const double s_hi = std::max(0.5 * (a + b - disc(xi)), 0.5 * (a + b - disc(eta)));
    law.cdf_fn = [core, t_of, s_decreasing, s_lo, s_hi, a, b](double y) {
        auto branch = [&](bool decreasing, double lo, double hi) {
            if (y <= lo) return 0.0;
            if (y >= hi) return 1.0;
            const double g = core->cdf(std::clamp(t_of(y), 0.0, 1.0));
            return decreasing ? 1.0 - g : g;
        };
        const double sp = branch(s_decreasing, s_lo, s_hi);
        const double tp = branch(!s_decreasing, a + b - s_hi, a + b - s_lo);
        return 0.5 * (sp + tp);
    };
    return law;
}

LimitLaw unitary_law(double alpha, double beta) {
    const RateParams p = rate_params(alpha, beta);
    LimitLaw law;
    law.circular = true;
    push_atom(law.atoms, 0.0, std::abs(alpha + beta - 1.0));
    push_atom(law.atoms, pi, std::abs(alpha - beta));
    finish_atoms(law);

    auto core = make_pqp_core(alpha, beta);
    if (!core) return law;
    const double xi = core->xi, eta = core->eta;
    const double theta1 = std::acos(std::clamp(2.0 * eta - 1.0, -1.0, 1.0));
    const double theta2 = std::acos(std::clamp(2.0 * xi - 1.0, -1.0, 1.0));
    law.support = {{-theta2, -theta1}, {theta1, theta2}};
    law.continuous_mass = 2.0 * p.rho;

    auto t_of = [](double th) { return 0.5 * (1.0 + std::cos(th)); };
    law.density_fn = [core, t_of](double th) {
        const double t = t_of(th);
        return core->density(t) * 0.5 * std::abs(std::sin(th));
    };
    law.cdf_fn = [core, t_of, theta1, theta2](double th) {
        double pos;  // P{ +theta(t) <= th }
        if (th <= theta1) pos = 0.0;
        else if (th >= theta2) pos = 1.0;
        else pos = 1.0 - core->cdf(t_of(th));
        double neg;  // P{ -theta(t) <= th }
        if (th >= -theta1) neg = 1.0;
        else if (th <= -theta2) neg = 0.0;
        else neg = core->cdf(t_of(th));
        return 0.5 * (pos + neg);
    };
    return law;
}

}  // namespace

LimitLaw minimizer_for(const CatalogFunction& h, double alpha, double beta) {
    switch (h.tag) {
        case CatalogFunction::Tag::pqp: return minimizer_pqp(alpha, beta);
        case CatalogFunction::Tag::anticommutator: return anticommutator_law(alpha, beta);
        case CatalogFunction::Tag::linear: return linear_law(h.a, h.b, alpha, beta);
        case CatalogFunction::Tag::unitary_product: return unitary_law(alpha, beta);
    }
    throw parameter_error("minimizer_for: unsupported function");
}

SpectralMeasure quantile_cloud(const LimitLaw& law, int n) {
    if (n < 2) throw parameter_error("quantile_cloud: need n >= 2");
    SpectralMeasure out;
    out.atoms = law.atoms;
    if (law.continuous_mass <= 1e-14) return out;
    out.cloud.reserve(n);
    for (int i = 0; i < n; ++i)
        out.cloud.push_back(law.quantile((i + 0.5) / static_cast<double>(n)));
    std::sort(out.cloud.begin(), out.cloud.end());
    out.cloud_mass = law.continuous_mass;
    return out;
}

}  // namespace projlab
