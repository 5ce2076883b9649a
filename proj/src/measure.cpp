#include "projlab/measure.hpp"

#include <algorithm>
#include <cmath>

namespace projlab {

double SpectralMeasure::total_mass() const {
    double m = cloud_mass;
    for (const auto& a : atoms) m += a.mass;
    return m;
}

double SpectralMeasure::point_mass() const {
    return cloud.empty() ? 0.0 : cloud_mass / static_cast<double>(cloud.size());
}

void SpectralMeasure::canonicalize(double merge_tol) {
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    std::vector<Atom> merged;
    for (const auto& a : atoms) {
        if (!merged.empty() && a.location - merged.back().location <= merge_tol) {
            // weighted location keeps exact ties exact
            const double w = merged.back().mass + a.mass;
            if (w > 0.0)
                merged.back().location =
                    (merged.back().location * merged.back().mass + a.location * a.mass) / w;
            merged.back().mass += a.mass;
        } else {
            merged.push_back(a);
        }
    }
    std::erase_if(merged, [](const Atom& a) { return a.mass <= 1e-15; });
    atoms = std::move(merged);

    std::sort(cloud.begin(), cloud.end());
    if (!cloud.empty() && !atoms.empty()) {
        const double w = point_mass();
        std::vector<double> kept;
        kept.reserve(cloud.size());
        for (double x : cloud) {
            bool absorbed = false;
            for (auto& a : atoms) {
                if (std::abs(x - a.location) <= merge_tol) {
                    a.mass += w;
                    cloud_mass -= w;
                    absorbed = true;
                    break;
                }
            }
            if (!absorbed) kept.push_back(x);
        }
        cloud = std::move(kept);
        if (cloud.empty()) cloud_mass = 0.0;
    }
}

SpectralMeasure empirical_measure(std::span<const double> eigs,
                                  std::span<const double> atom_locations,
                                  double tol) {
    if (eigs.empty()) throw parameter_error("empirical_measure: empty spectrum");

    std::vector<double> locs(atom_locations.begin(), atom_locations.end());
    std::sort(locs.begin(), locs.end());
    for (std::size_t i = 1; i < locs.size(); ++i)
        if (locs[i] - locs[i - 1] <= 2.0 * tol)
            throw parameter_error("empirical_measure: overlapping atom windows");

    const double n = static_cast<double>(eigs.size());
    SpectralMeasure out;
    std::vector<std::size_t> counts(locs.size(), 0);
    for (double x : eigs) {
        bool matched = false;
        for (std::size_t j = 0; j < locs.size(); ++j) {
            if (std::abs(x - locs[j]) <= tol) {
                ++counts[j];
                matched = true;
                break;
            }
        }
        if (!matched) out.cloud.push_back(x);
    }
    for (std::size_t j = 0; j < locs.size(); ++j)
        if (counts[j] > 0)
            out.atoms.push_back({locs[j], static_cast<double>(counts[j]) / n});
    out.cloud_mass = static_cast<double>(out.cloud.size()) / n;
    std::sort(out.cloud.begin(), out.cloud.end());
    return out;
}

}  // namespace projlab
