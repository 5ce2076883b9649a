#include "projlab/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace projlab {

GaussLegendre::GaussLegendre(int n) {
    nodes.resize(n);
    weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence for P_n(x) and P'_n(x)
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

const GaussLegendre& gl16() {
    static const GaussLegendre rule(16);
    return rule;
}

const GaussLegendre& gl32() {
    static const GaussLegendre rule(32);
    return rule;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    const GaussLegendre& rule) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        total += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return total * half;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, const GaussLegendre& rule) {
    double total = 0.0;
    const double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i)
        total += integrate_gl(f, a + i * h, a + (i + 1) * h, rule);
    return total;
}

double integrate_edge_singular(const std::function<double(double)>& density,
                               double lo, double hi, int panels) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    auto g = [&](double u) {
        const double x = mid + half * std::sin(u);
        return density(x) * half * std::cos(u);
    };
    return integrate_panels(g, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi,
                            panels, gl16());
}

}  // namespace projlab
