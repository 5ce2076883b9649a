#pragma once

#include <functional>
#include <vector>

namespace projlab {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussLegendre(int n);
};

const GaussLegendre& gl16();
const GaussLegendre& gl32();

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    const GaussLegendre& rule);

// Composite rule: [a, b] split into panels.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, const GaussLegendre& rule);

// Integral over (lo, hi) of a density with (inverse-)square-root edge
// behavior: substitutes x = mid + half * sin(u) before quadrature.
double integrate_edge_singular(const std::function<double(double)>& density,
                               double lo, double hi, int panels = 64);

}  // namespace projlab
