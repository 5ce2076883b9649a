#pragma once

#include <compare>
#include <iosfwd>

#include "projlab/tracial.hpp"

namespace projlab {

// Extended real: a finite value, +inf or -inf, never a sentinel float.
class ExtReal {
  public:
    constexpr ExtReal() = default;
    constexpr explicit ExtReal(double v) : kind_(Kind::finite), value_(v) {}
    static constexpr ExtReal infinity() { return ExtReal(Kind::pos_inf); }
    static constexpr ExtReal neg_infinity() { return ExtReal(Kind::neg_inf); }

    constexpr bool is_finite() const { return kind_ == Kind::finite; }
    constexpr bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
    constexpr bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

    // finite value; throws on infinities
    double value() const;

    // saturating arithmetic; +inf + -inf throws numeric_error
    ExtReal operator+(const ExtReal& o) const;
    ExtReal operator-() const;

    bool operator==(const ExtReal& o) const;

  private:
    enum class Kind { finite, pos_inf, neg_inf };
    constexpr explicit ExtReal(Kind k) : kind_(k), value_(0.0) {}
    Kind kind_ = Kind::finite;
    double value_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const ExtReal& x);

// The six-term closed form governing lim (1/N^2) log Z(N); the terms
// s^2/2 log s extend continuously by 0 at s = 0.
double b_function(double s, double t);

struct RateParams {
    double alpha = 0.0;
    double beta = 0.0;
    double rho = 0.0;     // min{alpha, beta, 1-alpha, 1-beta}
    double kappa = 0.0;   // |alpha - beta|
    double lambda = 0.0;  // |alpha + beta - 1|
    double C = 0.0;       // rho^2 B(kappa/rho, lambda/rho), 0 when rho = 0
};

RateParams rate_params(double alpha, double beta);

// Logarithmic energy Sigma(mu) of a measure: -inf for any measure with an
// atom of positive mass; for a pure cloud the off-diagonal pairwise
// estimator scaled by cloud_mass^2. Coincident cloud points give -inf and
// set *coincident when provided.
ExtReal log_energy(const SpectralMeasure& mu, bool* coincident = nullptr);

// Rate functional of the PQP empirical law. Finite only on measures of the
// form (1 - min{a,b}) d_0 + max{a+b-1, 0} d_1 + rho * mu with mu atom-free
// in (0,1); then -rho^2 Sigma(mu) - rho kappa Int log x dmu
// - rho lambda Int log(1-x) dmu + C.
ExtReal rate_tilde(const SpectralMeasure& mu_tilde, double alpha, double beta);

// Rate functional on tracial states: +inf unless the corner masses equal
// freeness_atoms(alpha, beta) and the generator traces match; otherwise the
// same weighted-energy functional of tau's mu.
ExtReal rate_ts(const TracialState& tau, double alpha, double beta);

// Voiculescu free entropy of the state: chi(tau) = -I(tau) at the state's
// own generator traces. Always <= 0, equal to 0 iff the state is free.
ExtReal free_entropy(const TracialState& tau);

// Contracted rate for the empirical law of h(P,Q). Checks the pushforward
// shape of the measure (atoms, branch symmetry, support), then evaluates the
// corresponding closed form. Measures are on the real line for Hermitian h
// and on angles for the unitary product.
ExtReal rate_contracted(const SpectralMeasure& measure, const CatalogFunction& h,
                        double alpha, double beta);

}  // namespace projlab
