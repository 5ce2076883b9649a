#pragma once

#include <string_view>
#include <vector>

#include "projlab/ensembles.hpp"
#include "projlab/measure.hpp"

namespace projlab {

// The implemented function catalog h(P,Q):
//   pqp             P Q P                    (Hermitian)
//   anticommutator  P Q + Q P                (Hermitian)
//   linear          a P + b Q, a,b != 0      (Hermitian)
//   unitary_product exp(i pi P) exp(-i pi Q) (unitary, stored on angles)
struct CatalogFunction {
    enum class Tag { pqp, anticommutator, linear, unitary_product };

    Tag tag = Tag::pqp;
    double a = 0.0;
    double b = 0.0;

    static CatalogFunction pqp() { return {Tag::pqp, 0.0, 0.0}; }
    static CatalogFunction anticommutator() { return {Tag::anticommutator, 0.0, 0.0}; }
    static CatalogFunction linear(double a, double b);
    static CatalogFunction unitary_product() { return {Tag::unitary_product, 0.0, 0.0}; }

    bool hermitian() const { return tag != Tag::unitary_product; }
    const char* name() const;
};

CatalogFunction catalog_from_name(std::string_view name, double a = 0.0, double b = 0.0);

// The matrix h(P,Q). exp(i pi P) is evaluated exactly as I - 2P.
Matrix apply_catalog(const ProjectionPair& pair, const CatalogFunction& h);

// Where the spectrum of h(P,Q) can have forced atoms (angles 0, pi for the
// unitary product).
std::vector<double> catalog_atom_locations(const CatalogFunction& h);

// Two-projection structure extraction: eigenvalue counts near 1 of the four
// corner matrices PQP, P(I-Q)P, (I-P)Q(I-P), (I-P)(I-Q)(I-P), plus the
// interior spectrum of PQP. Throws extraction_error if the interior counts
// are inconsistent with the corner counts.
struct PairDecomposition {
    int N = 0;
    int c11 = 0, c10 = 0, c01 = 0, c00 = 0;
    std::vector<double> interior;  // PQP eigenvalues in (tol, 1-tol), sorted
};

PairDecomposition decompose_pair(const ProjectionPair& pair, double tol = tol::atom);

// Sorted spectrum of h(P,Q); eigenvalue angles in (-pi, pi] for the unitary
// product, computed through the 2x2 block correspondence rather than a
// non-Hermitian eigensolver.
std::vector<double> catalog_spectrum(const ProjectionPair& pair, const CatalogFunction& h,
                                     double tol = tol::atom);

// Same spectrum through the structure-theorem eigenvalue maps
// (x -> x +- sqrt(x), x -> (a+b +- sqrt((a-b)^2+4abx))/2, x -> +-acos(2x-1)),
// used to cross-check the direct eigensolves.
std::vector<double> mapped_catalog_spectrum(const ProjectionPair& pair,
                                            const CatalogFunction& h,
                                            double tol = tol::atom);

// Eigenvalue angles of a unitary matrix via its commuting Hermitian and
// anti-Hermitian parts; cross-check only, meant for small N.
std::vector<double> unitary_angles_dense(const Matrix& u, double cluster_tol = 1e-8);

// tr_N of the word in {e -> P, f -> Q}; the empty word gives 1.
Complex word_moment(const ProjectionPair& pair, std::string_view word);

}  // namespace projlab
