#include "projlab/rate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <span>

namespace projlab {

double ExtReal::value() const {
    if (!is_finite()) throw numeric_error("ExtReal: value() on an infinite value");
    return value_;
}

ExtReal ExtReal::operator+(const ExtReal& o) const {
    if (is_finite() && o.is_finite()) return ExtReal(value_ + o.value_);
    if (is_pos_inf() && o.is_neg_inf())
        throw numeric_error("ExtReal: +inf + -inf is undefined");
    if (is_neg_inf() && o.is_pos_inf())
        throw numeric_error("ExtReal: -inf + +inf is undefined");
    return is_finite() ? o : *this;
}

ExtReal ExtReal::operator-() const {
    if (is_pos_inf()) return neg_infinity();
    if (is_neg_inf()) return infinity();
    return ExtReal(-value_);
}

bool ExtReal::operator==(const ExtReal& o) const {
    if (kind_ != o.kind_) return false;
    return !is_finite() || value_ == o.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtReal& x) {
    if (x.is_pos_inf()) return os << "+inf";
    if (x.is_neg_inf()) return os << "-inf";
    return os << x.value();
}

namespace {

// s^2/2 log s, continuously extended by 0 at s = 0
double half_sq_log(double s) {
    return s <= 0.0 ? 0.0 : 0.5 * s * s * std::log(s);
}

}  // namespace

double b_function(double s, double t) {
    if (s < 0.0 || t < 0.0)
        throw parameter_error("b_function: arguments must be non-negative");
    return half_sq_log(1.0 + s) - half_sq_log(s) + half_sq_log(1.0 + t) -
           half_sq_log(t) - half_sq_log(2.0 + s + t) + half_sq_log(1.0 + s + t);
}

RateParams rate_params(double alpha, double beta) {
    if (alpha < 0.0 || alpha > 1.0 || beta < 0.0 || beta > 1.0)
        throw parameter_error("rate_params: alpha, beta must lie in [0, 1]");
    RateParams p;
    p.alpha = alpha;
    p.beta = beta;
    p.rho = std::min({alpha, beta, 1.0 - alpha, 1.0 - beta});
    p.kappa = std::abs(alpha - beta);
    p.lambda = std::abs(alpha + beta - 1.0);
    p.C = p.rho > 0.0 ? p.rho * p.rho * b_function(p.kappa / p.rho, p.lambda / p.rho) : 0.0;
    return p;
}

namespace {

struct PairSum {
    double mean = 0.0;       // off-diagonal mean of log|x_i - x_j|
    bool coincident = false;
};

PairSum offdiag_log_mean(std::span<const double> pts) {
    PairSum r;
    const std::size_t n = pts.size();
    if (n < 2) return r;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::abs(pts[i] - pts[j]);
            if (d == 0.0) {
                r.coincident = true;
                return r;
            }
            total += std::log(d);
        }
    }
    r.mean = 2.0 * total / (static_cast<double>(n) * (n - 1));
    return r;
}

// weighted-energy functional F-2.9 on a probability cloud in (0,1)
ExtReal weighted_energy(std::span<const double> t_points, const RateParams& p) {
    if (t_points.empty()) return ExtReal(p.C);
    const PairSum s = offdiag_log_mean(t_points);
    if (s.coincident) return ExtReal::infinity();
    double value = -p.rho * p.rho * s.mean + p.C;
    if (p.kappa > 0.0) {
        double acc = 0.0;
        for (double t : t_points) {
            if (t <= tol::log_edge) return ExtReal::infinity();
            acc += std::log(t);
        }
        value -= p.rho * p.kappa * acc / static_cast<double>(t_points.size());
    }
    if (p.lambda > 0.0) {
        double acc = 0.0;
        for (double t : t_points) {
            if (t >= 1.0 - tol::log_edge) return ExtReal::infinity();
            acc += std::log(1.0 - t);
        }
        value -= p.rho * p.lambda * acc / static_cast<double>(t_points.size());
    }
    return ExtReal(value);
}

// expected vs found atom bookkeeping for decomposition checks
struct ExpectedAtom {
    double location;
    double mass;
    double found = 0.0;
};

bool match_atoms(const SpectralMeasure& m, std::vector<ExpectedAtom>& expected) {
    for (const auto& a : m.atoms) {
        bool matched = false;
        for (auto& e : expected) {
            if (std::abs(a.location - e.location) <= tol::atom) {
                e.found += a.mass;
                matched = true;
                break;
            }
        }
        if (!matched && a.mass > tol::mass) return false;
    }
    for (const auto& e : expected)
        if (std::abs(e.found - e.mass) > tol::mass) return false;
    return true;
}

std::vector<ExpectedAtom> merge_expected(std::vector<ExpectedAtom> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const ExpectedAtom& x, const ExpectedAtom& y) { return x.location < y.location; });
    std::vector<ExpectedAtom> out;
    for (const auto& e : raw) {
        if (!out.empty() && e.location - out.back().location <= tol::atom_merge)
            out.back().mass += e.mass;
        else
            out.push_back(e);
    }
    return out;
}

bool mirror_matches(std::span<const double> lo_sorted, std::span<const double> hi_sorted,
                    double center2) {
    // hi reflected through the center must reproduce lo
    const std::size_t n = lo_sorted.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double reflected = center2 - hi_sorted[n - 1 - i];
        if (std::abs(reflected - lo_sorted[i]) > tol::shape) return false;
    }
    return true;
}

}  // namespace

ExtReal log_energy(const SpectralMeasure& mu, bool* coincident) {
    if (coincident) *coincident = false;
    for (const auto& a : mu.atoms)
        if (a.mass > 1e-15) return ExtReal::neg_infinity();
    if (mu.cloud_mass <= 0.0 || mu.cloud.empty()) return ExtReal(0.0);
    if (mu.cloud.size() == 1) return ExtReal::neg_infinity();
    const PairSum s = offdiag_log_mean(mu.cloud);
    if (s.coincident) {
        if (coincident) *coincident = true;
        return ExtReal::neg_infinity();
    }
    return ExtReal(mu.cloud_mass * mu.cloud_mass * s.mean);
}

ExtReal rate_tilde(const SpectralMeasure& mu_tilde, double alpha, double beta) {
    const RateParams p = rate_params(alpha, beta);

    std::vector<ExpectedAtom> expected{{0.0, 1.0 - std::min(alpha, beta)},
                                       {1.0, std::max(alpha + beta - 1.0, 0.0)}};
    if (!match_atoms(mu_tilde, expected)) return ExtReal::infinity();
    if (std::abs(mu_tilde.cloud_mass - p.rho) > tol::mass) return ExtReal::infinity();
    for (double x : mu_tilde.cloud)
        if (x <= 0.0 || x >= 1.0) return ExtReal::infinity();
    if (p.rho <= tol::mass) return ExtReal(p.C);
    if (mu_tilde.cloud.empty()) return ExtReal::infinity();
    return weighted_energy(mu_tilde.cloud, p);
}

ExtReal rate_ts(const TracialState& tau, double alpha, double beta) {
    const auto fa = freeness_atoms(alpha, beta);
    if (std::abs(tau.a11 - fa[0]) > tol::mass || std::abs(tau.a10 - fa[1]) > tol::mass ||
        std::abs(tau.a01 - fa[2]) > tol::mass || std::abs(tau.a00 - fa[3]) > tol::mass)
        return ExtReal::infinity();
    const auto [te, tf] = generator_traces(tau);
    if (std::abs(te - alpha) > tol::mass || std::abs(tf - beta) > tol::mass)
        return ExtReal::infinity();

    const RateParams p = rate_params(alpha, beta);
    if (tau.rho() <= tol::mass) return ExtReal(p.C);
    if (std::abs(tau.mu.total_mass() - 1.0) > tol::mass) return ExtReal::infinity();
    for (const auto& a : tau.mu.atoms)
        if (a.mass > tol::mass) return ExtReal::infinity();
    for (double x : tau.mu.cloud)
        if (x <= 0.0 || x >= 1.0) return ExtReal::infinity();
    return weighted_energy(tau.mu.cloud, p);
}

ExtReal free_entropy(const TracialState& tau) {
    const auto [alpha, beta] = generator_traces(tau);
    return -rate_ts(tau, alpha, beta);
}

namespace {

ExtReal rate_anticommutator(const SpectralMeasure& m, const RateParams& p) {
    std::vector<ExpectedAtom> expected = merge_expected(
        {{0.0, std::max({p.kappa, 1.0 - 2.0 * p.alpha, 1.0 - 2.0 * p.beta})},
         {2.0, std::max(p.alpha + p.beta - 1.0, 0.0)}});
    if (!match_atoms(m, expected)) return ExtReal::infinity();
    if (std::abs(m.cloud_mass - 2.0 * p.rho) > tol::mass) return ExtReal::infinity();
    if (p.rho <= tol::mass) return m.cloud.empty() ? ExtReal(p.C) : ExtReal::infinity();

    std::vector<double> neg, pos;
    for (double y : m.cloud) {
        if (y == 0.0 || y <= -0.25 - 1e-12 || y >= 2.0) return ExtReal::infinity();
        (y < 0.0 ? neg : pos).push_back(y);
    }
    if (neg.size() != pos.size() || pos.empty()) return ExtReal::infinity();

    // S: t -> t + sqrt(t) is injective; recover mu from the positive branch
    std::vector<double> t_pts(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) {
        const double s = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * pos[i]));
        t_pts[i] = s * s;
    }
    // the negative branch must be the image of the same mu under t - sqrt(t)
    std::vector<double> t_images(t_pts.size());
    for (std::size_t i = 0; i < t_pts.size(); ++i)
        t_images[i] = t_pts[i] - std::sqrt(t_pts[i]);
    std::sort(t_images.begin(), t_images.end());
    for (std::size_t i = 0; i < neg.size(); ++i)
        if (std::abs(t_images[i] - neg[i]) > tol::shape) return ExtReal::infinity();

    return weighted_energy(t_pts, p);
}

ExtReal rate_linear(const SpectralMeasure& m, const CatalogFunction& h, const RateParams& p) {
    const double a = h.a, b = h.b;
    std::vector<ExpectedAtom> expected =
        merge_expected({{0.0, std::max(1.0 - p.alpha - p.beta, 0.0)},
                        {a, std::max(p.alpha - p.beta, 0.0)},
                        {b, std::max(p.beta - p.alpha, 0.0)},
                        {a + b, std::max(p.alpha + p.beta - 1.0, 0.0)}});
    if (!match_atoms(m, expected)) return ExtReal::infinity();
    if (std::abs(m.cloud_mass - 2.0 * p.rho) > tol::mass) return ExtReal::infinity();
    if (p.rho <= tol::mass) return m.cloud.empty() ? ExtReal(p.C) : ExtReal::infinity();

    const double mid = 0.5 * (a + b);
    std::vector<double> lo, hi;
    for (double y : m.cloud) {
        if (y == mid) return ExtReal::infinity();
        (y < mid ? lo : hi).push_back(y);
    }
    if (lo.size() != hi.size() || lo.empty()) return ExtReal::infinity();
    if (!mirror_matches(lo, hi, a + b)) return ExtReal::infinity();

    // support check through the preimage t = (y-a)(y-b)/ab in (0,1)
    const double ab = a * b;
    std::vector<double> t_all(m.cloud.size());
    for (std::size_t i = 0; i < m.cloud.size(); ++i) {
        const double t = (m.cloud[i] - a) * (m.cloud[i] - b) / ab;
        if (t <= -1e-12 || t >= 1.0 + 1e-12) return ExtReal::infinity();
        t_all[i] = std::clamp(t, 0.0, 1.0);
    }

    const PairSum s = offdiag_log_mean(m.cloud);
    if (s.coincident) return ExtReal::infinity();
    const double n = static_cast<double>(m.cloud.size());
    const double max4 = std::max({p.alpha, p.beta, 1.0 - p.alpha, 1.0 - p.beta});
    double value = -2.0 * p.rho * p.rho * s.mean + p.C +
                   p.rho * max4 * std::log(std::abs(ab));
    if (p.kappa > 0.0) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m.cloud.size(); ++i) {
            if (t_all[i] <= tol::log_edge) return ExtReal::infinity();
            acc += std::log(std::abs((m.cloud[i] - a) * (m.cloud[i] - b)));
        }
        value -= p.rho * p.kappa * acc / n;
    }
    if (p.lambda > 0.0) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m.cloud.size(); ++i) {
            if (t_all[i] >= 1.0 - tol::log_edge) return ExtReal::infinity();
            acc += std::log(std::abs(m.cloud[i] * (a + b - m.cloud[i])));
        }
        value -= p.rho * p.lambda * acc / n;
    }
    return ExtReal(value);
}

ExtReal rate_unitary(const SpectralMeasure& m, const RateParams& p) {
    constexpr double pi = std::numbers::pi;
    // canonicalize angle -pi to pi for the atom check
    SpectralMeasure mm = m;
    for (auto& a : mm.atoms)
        if (std::abs(a.location + pi) <= tol::atom) a.location = pi;
    std::vector<ExpectedAtom> expected{{0.0, std::abs(p.alpha + p.beta - 1.0)},
                                       {pi, std::abs(p.alpha - p.beta)}};
    if (!match_atoms(mm, expected)) return ExtReal::infinity();
    if (std::abs(m.cloud_mass - 2.0 * p.rho) > tol::mass) return ExtReal::infinity();
    if (p.rho <= tol::mass) return m.cloud.empty() ? ExtReal(p.C) : ExtReal::infinity();

    std::vector<double> neg, pos;
    for (double th : m.cloud) {
        if (th == 0.0 || std::abs(th) >= pi) return ExtReal::infinity();
        (th < 0.0 ? neg : pos).push_back(th);
    }
    if (neg.size() != pos.size() || pos.empty()) return ExtReal::infinity();
    // symmetry about the real axis
    for (std::size_t i = 0; i < pos.size(); ++i)
        if (std::abs(pos[i] + neg[neg.size() - 1 - i]) > tol::shape)
            return ExtReal::infinity();

    // all integrands depend on the angle through cos only, so the halved
    // measure on positive angles carries the whole computation
    const double n = static_cast<double>(pos.size());
    std::vector<double> cosv(pos.size()), t_pts(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) {
        cosv[i] = std::cos(pos[i]);
        t_pts[i] = 0.5 * (1.0 + cosv[i]);
    }
    const PairSum s = offdiag_log_mean(cosv);
    if (s.coincident) return ExtReal::infinity();
    const double max4 = std::max({p.alpha, p.beta, 1.0 - p.alpha, 1.0 - p.beta});
    double value = -p.rho * p.rho * s.mean + p.C + p.rho * max4 * std::log(2.0);
    if (p.kappa > 0.0) {
        double acc = 0.0;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            if (t_pts[i] <= tol::log_edge) return ExtReal::infinity();
            acc += std::log(1.0 + cosv[i]);
        }
        value -= p.rho * p.kappa * acc / n;
    }
    if (p.lambda > 0.0) {
        double acc = 0.0;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            if (t_pts[i] >= 1.0 - tol::log_edge) return ExtReal::infinity();
            acc += std::log(1.0 - cosv[i]);
        }
        value -= p.rho * p.lambda * acc / n;
    }
    return ExtReal(value);
}

}  // namespace

ExtReal rate_contracted(const SpectralMeasure& measure, const CatalogFunction& h,
                        double alpha, double beta) {
    const RateParams p = rate_params(alpha, beta);
    switch (h.tag) {
        case CatalogFunction::Tag::pqp:
            return rate_tilde(measure, alpha, beta);
        case CatalogFunction::Tag::anticommutator:
            return rate_anticommutator(measure, p);
        case CatalogFunction::Tag::linear:
            return rate_linear(measure, h, p);
        case CatalogFunction::Tag::unitary_product:
            return rate_unitary(measure, p);
    }
    throw parameter_error("rate_contracted: unsupported function");
}

}  // namespace projlab
