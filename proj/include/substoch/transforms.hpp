#ifndef SUBSTOCH_TRANSFORMS_HPP
#define SUBSTOCH_TRANSFORMS_HPP

#include <functional>

#include "substoch/cone.hpp"
#include "substoch/weighted_space.hpp"

// Cone-preserving operator transforms: power series F(S) with non-negative
// coefficients, the exponential, and the resolvent (lambda*I - S)^-1, gated
// by a conservative spectral-radius estimate.

namespace substoch {

struct PowerSeries {
    std::function<double(std::size_t)> coeff;  // j -> alpha_j >= 0
    double radius;                             // convergence radius, may be +inf

    static PowerSeries exponential();        // alpha_j = 1/j!
    static PowerSeries neumann(double lam);  // alpha_j = lam^-(j+1), radius lam
    static PowerSeries monomial(std::size_t degree);  // alpha_degree = 1
};

struct SeriesOptions {
    std::size_t max_terms = 10000;
    double term_tol = 1e-15;  // relative to the accumulated L1w norm
};

struct SpectralEstimate {
    double value = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
};

/// Power iteration from the all-ones vector; convergence declared when
/// successive L1w norm ratios differ by less than tol.
SpectralEstimate spectral_radius(const PositiveOperator& S, std::size_t iters = 1000,
                                 double tol = 1e-12);

/// Upper bound ||S^k||^(1/k) in the L1w operator norm; the fallback gate when
/// power iteration does not settle (reducible or periodic patterns).
double spectral_radius_gelfand(const PositiveOperator& S, std::size_t k = 64);

/// Power-iteration estimate, replaced by the Gelfand bound when unconverged.
double gated_spectral_radius(const PositiveOperator& S);

/// sum_j alpha_j S^j f, truncated when the next term's L1w norm drops below
/// term_tol times the accumulated norm.  Requires rho(S) < radius(F).
/// When result_strictly_positive is given, it receives the f >> 0 check of
/// the output (automatic for series with alpha_0 > 0 and f >> 0).
PositiveVector series_apply(const PowerSeries& F, const PositiveOperator& S,
                            const PositiveVector& f, SeriesOptions opts = {},
                            bool* result_strictly_positive = nullptr);

/// exp(S) f.
PositiveVector exp_apply(const PositiveOperator& S, const PositiveVector& f,
                         SeriesOptions opts = {});

/// (lambda*I - S)^-1 f by direct LU solve; lambda must exceed the
/// spectral-radius estimate.
PositiveVector resolvent_apply(const PositiveOperator& S, double lambda,
                               const PositiveVector& f, SeriesOptions opts = {});

/// Same map through the series route; kept as an independent cross-check of
/// the direct solve.
PositiveVector resolvent_series(const PositiveOperator& S, double lambda,
                                const PositiveVector& f, SeriesOptions opts = {});

/// For K strictly positive on f and commuting with S (max-entry commutator
/// within tol): violation of S(Kf) <= Kf, i.e. evidence that Kf stayed in
/// the wedge.
double commuting_preservation_check(const PositiveOperator& K, const PositiveOperator& S,
                                    const ConeCertificate& cert, double tol = kDefaultTol);

}  // namespace substoch

#endif
