#include "projlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace projlab {

CatalogFunction CatalogFunction::linear(double a, double b) {
    if (a == 0.0 || b == 0.0)
        throw parameter_error("CatalogFunction::linear: coefficients must be nonzero");
    return {Tag::linear, a, b};
}

const char* CatalogFunction::name() const {
    switch (tag) {
        case Tag::pqp: return "pqp";
        case Tag::anticommutator: return "anticommutator";
        case Tag::linear: return "linear";
        case Tag::unitary_product: return "unitary_product";
    }
    return "?";
}

CatalogFunction catalog_from_name(std::string_view name, double a, double b) {
    if (name == "pqp") return CatalogFunction::pqp();
    if (name == "anticommutator" || name == "anti") return CatalogFunction::anticommutator();
    if (name == "linear") return CatalogFunction::linear(a, b);
    if (name == "unitary" || name == "unitary_product") return CatalogFunction::unitary_product();
    throw parameter_error("unsupported catalog function: " + std::string(name));
}

Matrix apply_catalog(const ProjectionPair& pair, const CatalogFunction& h) {
    switch (h.tag) {
        case CatalogFunction::Tag::pqp:
            return pair.P * pair.Q * pair.P;
        case CatalogFunction::Tag::anticommutator: {
            const Matrix x = pair.P * pair.Q;
            return x + Matrix(x.adjoint());
        }
        case CatalogFunction::Tag::linear:
            return h.a * pair.P + h.b * pair.Q;
        case CatalogFunction::Tag::unitary_product: {
            const int n = pair.N;
            const Matrix i = Matrix::Identity(n, n);
            return (i - 2.0 * pair.P) * (i - 2.0 * pair.Q);
        }
    }
    throw parameter_error("apply_catalog: unsupported function");
}

std::vector<double> catalog_atom_locations(const CatalogFunction& h) {
    switch (h.tag) {
        case CatalogFunction::Tag::pqp: return {0.0, 1.0};
        case CatalogFunction::Tag::anticommutator: return {0.0, 2.0};
        case CatalogFunction::Tag::linear: {
            std::vector<double> locs{0.0, h.a, h.b, h.a + h.b};
            std::sort(locs.begin(), locs.end());
            locs.erase(std::unique(locs.begin(), locs.end(),
                                   [](double x, double y) { return std::abs(x - y) <= tol::atom_merge; }),
                       locs.end());
            return locs;
        }
        case CatalogFunction::Tag::unitary_product: return {0.0, std::numbers::pi};
    }
    return {};
}

namespace {

int count_near_one(const Vector& eigs, double tol) {
    int c = 0;
    for (Eigen::Index i = 0; i < eigs.size(); ++i)
        if (std::abs(eigs(i) - 1.0) <= tol) ++c;
    return c;
}

}  // namespace

PairDecomposition decompose_pair(const ProjectionPair& pair, double tol) {
    const int n = pair.N;
    const Matrix i = Matrix::Identity(n, n);
    const Matrix pc = i - pair.P;
    const Matrix qc = i - pair.Q;

    const Vector pqp = hermitian_eigenvalues(pair.P * pair.Q * pair.P);
    const Vector pqcp = hermitian_eigenvalues(pair.P * qc * pair.P);
    const Vector pcqpc = hermitian_eigenvalues(pc * pair.Q * pc);
    const Vector pcqcpc = hermitian_eigenvalues(pc * qc * pc);

    PairDecomposition d;
    d.N = n;
    d.c11 = count_near_one(pqp, tol);
    d.c10 = count_near_one(pqcp, tol);
    d.c01 = count_near_one(pcqpc, tol);
    d.c00 = count_near_one(pcqcpc, tol);

    for (Eigen::Index j = 0; j < pqp.size(); ++j)
        if (pqp(j) > tol && pqp(j) < 1.0 - tol) d.interior.push_back(pqp(j));
    std::sort(d.interior.begin(), d.interior.end());

    int interior_pqcp = 0;
    for (Eigen::Index j = 0; j < pqcp.size(); ++j)
        if (pqcp(j) > tol && pqcp(j) < 1.0 - tol) ++interior_pqcp;

    // the two P-corner interiors together must account for N - sum of counts
    const int interior_count = static_cast<int>(d.interior.size()) + interior_pqcp;
    const int expected = n - (d.c11 + d.c10 + d.c01 + d.c00);
    if (interior_count != expected)
        throw extraction_error(
            "decompose_pair: interior eigenvalue count " + std::to_string(interior_count) +
                " does not match N(1 - sum alpha) = " + std::to_string(expected),
            interior_count, expected);
    return d;
}

std::vector<double> catalog_spectrum(const ProjectionPair& pair, const CatalogFunction& h,
                                     double tol) {
    if (h.hermitian()) {
        const Vector eigs = hermitian_eigenvalues(apply_catalog(pair, h));
        return {eigs.data(), eigs.data() + eigs.size()};
    }
    return mapped_catalog_spectrum(pair, h, tol);
}

std::vector<double> mapped_catalog_spectrum(const ProjectionPair& pair,
                                            const CatalogFunction& h, double tol) {
    const PairDecomposition d = decompose_pair(pair, tol);
    std::vector<double> out;
    out.reserve(pair.N);
    switch (h.tag) {
        case CatalogFunction::Tag::pqp: {
            out.assign(static_cast<std::size_t>(pair.N - d.c11) - d.interior.size(), 0.0);
            out.insert(out.end(), d.interior.begin(), d.interior.end());
            out.insert(out.end(), d.c11, 1.0);
            break;
        }
        case CatalogFunction::Tag::anticommutator: {
            out.assign(static_cast<std::size_t>(d.c10 + d.c01 + d.c00), 0.0);
            out.insert(out.end(), d.c11, 2.0);
            for (double x : d.interior) {
                const double r = std::sqrt(x);
                out.push_back(x + r);
                out.push_back(x - r);
            }
            break;
        }
        case CatalogFunction::Tag::linear: {
            out.assign(static_cast<std::size_t>(d.c00), 0.0);
            out.insert(out.end(), d.c10, h.a);
            out.insert(out.end(), d.c01, h.b);
            out.insert(out.end(), d.c11, h.a + h.b);
            for (double x : d.interior) {
                const double r = std::sqrt((h.a - h.b) * (h.a - h.b) + 4.0 * h.a * h.b * x);
                out.push_back(0.5 * (h.a + h.b - r));
                out.push_back(0.5 * (h.a + h.b + r));
            }
            break;
        }
        case CatalogFunction::Tag::unitary_product: {
            out.assign(static_cast<std::size_t>(d.c11 + d.c00), 0.0);
            out.insert(out.end(), d.c10 + d.c01, std::numbers::pi);
            for (double x : d.interior) {
                const double theta = std::acos(std::clamp(2.0 * x - 1.0, -1.0, 1.0));
                out.push_back(theta);
                out.push_back(-theta);
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> unitary_angles_dense(const Matrix& u, double cluster_tol) {
    if (!is_unitary(u, tol::structural * std::max(1.0, u.norm())))
        throw shape_error("unitary_angles_dense: input is not unitary");
    const Matrix h = 0.5 * (u + Matrix(u.adjoint()));
    const Matrix k = Complex(0.0, -0.5) * (u - Matrix(u.adjoint()));
    const EigenSystem hs = hermitian_eigensystem(h);

    std::vector<double> angles;
    Eigen::Index start = 0;
    while (start < hs.values.size()) {
        Eigen::Index stop = start + 1;
        while (stop < hs.values.size() &&
               hs.values(stop) - hs.values(stop - 1) <= cluster_tol)
            ++stop;
        const Matrix basis = hs.vectors.middleCols(start, stop - start);
        const Matrix krest = basis.adjoint() * k * basis;
        const Vector sines = hermitian_eigenvalues(0.5 * (krest + Matrix(krest.adjoint())));
        const double c = hs.values(start);
        for (Eigen::Index j = 0; j < sines.size(); ++j)
            angles.push_back(std::atan2(sines(j), c));
        start = stop;
    }
    std::sort(angles.begin(), angles.end());
    return angles;
}

Complex word_moment(const ProjectionPair& pair, std::string_view word) {
    if (word.empty()) return Complex(1.0, 0.0);
    Matrix m = Matrix::Identity(pair.N, pair.N);
    for (char c : word) {
        if (c == 'e') m = m * pair.P;
        else if (c == 'f') m = m * pair.Q;
        else throw parameter_error("word_moment: word must be over {e, f}");
    }
    return trace_normalized(m);
}

}  // namespace projlab
