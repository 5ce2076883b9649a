#pragma once

// All numerical tolerances live here.

namespace projlab::tol {

// Structural predicates: hermiticity, unitarity, idempotence residuals.
inline constexpr double structural = 1e-10;

// Composite residuals such as ||S*M*S - I||_F after an inverse square root.
inline constexpr double composite = 1e-8;

// Default absolute window for attributing eigenvalues to spectral atoms.
inline constexpr double atom = 1e-8;

// Cloud points landing this close to an atom location are merged into it.
inline constexpr double atom_merge = 1e-12;

// Matching tolerance for atom masses in measure decompositions (masses are
// exact rationals k/N in practice).
inline constexpr double mass = 1e-9;

// Cloud points this close to 0 or 1 make weighted log-integrals -inf.
inline constexpr double log_edge = 1e-12;

// Weak-shape tolerance for sorted-cloud comparisons in contracted rates:
// exact pushforward images match to machine precision, quantile
// discretizations of a valid law match to O(1/n).
inline constexpr double shape = 2e-2;

}  // namespace projlab::tol
