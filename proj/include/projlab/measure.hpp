#pragma once

#include <span>
#include <vector>

#include "projlab/constants.hpp"
#include "projlab/errors.hpp"

namespace projlab {

struct Atom {
    double location = 0.0;
    double mass = 0.0;
};

// Probability measure as atoms plus an equal-weight point cloud carrying the
// continuous mass. Each cloud point weighs cloud_mass / cloud.size().
// Locations are reals, or angles in (-pi, pi] for circle-valued spectra.
struct SpectralMeasure {
    std::vector<Atom> atoms;
    std::vector<double> cloud;  // sorted ascending
    double cloud_mass = 0.0;

    double total_mass() const;
    double point_mass() const;  // cloud_mass / cloud.size(), 0 for empty cloud

    // Sort atoms and cloud, merge atoms closer than merge_tol, drop atoms of
    // negligible mass, absorb cloud points sitting within merge_tol of an atom.
    void canonicalize(double merge_tol = tol::atom_merge);
};

// Classify eigenvalues into declared atoms (within tol) and an equal-weight
// cloud of the remainder. Throws parameter_error on an empty input or when
// two atom windows overlap.
SpectralMeasure empirical_measure(std::span<const double> eigs,
                                  std::span<const double> atom_locations,
                                  double tol = tol::atom);

}  // namespace projlab
