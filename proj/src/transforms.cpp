#include "substoch/transforms.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "substoch/kernels.hpp"

namespace substoch {

namespace {

// Matrix of the weighted action, m_ij = s_ij * w_j, so the operator becomes a
// plain matvec and its spectrum is the operator's spectrum.
std::vector<double> effective_matrix(const PositiveOperator& S) {
    const std::size_t n = S.size();
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = S.at(i, j) * S.space()->weight(j);
    return m;
}

double l1w(const WeightedSpace& space, std::span<const double> x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::fabs(x[i]) * space.weight(i);
    return acc;
}

// L1w -> L1w operator norm of the effective matrix: max_j sum_i w_i |m_ij| / w_j.
double l1w_operator_norm(const WeightedSpace& space, std::span<const double> m, std::size_t n) {
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n; ++i) col += space.weight(i) * std::fabs(m[i * n + j]);
        best = std::max(best, col / space.weight(j));
    }
    return best;
}

}  // namespace

PowerSeries PowerSeries::exponential() {
    return PowerSeries{[](std::size_t j) { return 1.0 / std::tgamma(static_cast<double>(j) + 1.0); },
                       std::numeric_limits<double>::infinity()};
}

PowerSeries PowerSeries::neumann(double lam) {
    if (!(lam > 0.0) || !std::isfinite(lam))
        throw PreconditionError("neumann series needs finite lambda > 0");
    return PowerSeries{[lam](std::size_t j) {
                           return std::pow(lam, -(static_cast<double>(j) + 1.0));
                       },
                       lam};
}

PowerSeries PowerSeries::monomial(std::size_t degree) {
    return PowerSeries{[degree](std::size_t j) { return j == degree ? 1.0 : 0.0; },
                       std::numeric_limits<double>::infinity()};
}

SpectralEstimate spectral_radius(const PositiveOperator& S, std::size_t iters, double tol) {
    if (!(tol > 0.0)) throw PreconditionError("spectral_radius needs tol > 0");
    const std::size_t n = S.size();
    const auto& space = *S.space();
    const std::vector<double> m = effective_matrix(S);

    std::vector<double> x(n, 1.0);
    std::vector<double> y(n);
    double x_norm = l1w(space, x);
    double prev_ratio = -1.0;
    for (std::size_t it = 1; it <= iters; ++it) {
        kernels::matvec(m, n, n, x, y);
        const double y_norm = l1w(space, y);
        if (y_norm == 0.0) return SpectralEstimate{0.0, true, it};  // S^it = 0, nilpotent
        const double ratio = y_norm / x_norm;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / y_norm;
        x_norm = 1.0;
        if (prev_ratio >= 0.0 && std::fabs(ratio - prev_ratio) < tol * std::max(1.0, ratio))
            return SpectralEstimate{ratio, true, it};
        prev_ratio = ratio;
    }
    return SpectralEstimate{prev_ratio, false, iters};
}

double spectral_radius_gelfand(const PositiveOperator& S, std::size_t k) {
    if (k == 0 || (k & (k - 1)) != 0)
        throw PreconditionError("spectral_radius_gelfand needs a power-of-two k");
    const std::size_t n = S.size();
    const auto& space = *S.space();
    std::vector<double> m = effective_matrix(S);

    const double scale = l1w_operator_norm(space, m, n);
    if (scale == 0.0) return 0.0;
    for (auto& v : m) v /= scale;

    std::vector<double> tmp(n * n);
    std::size_t done = 1;
    while (done < k) {
        kernels::matmul(m, m, n, tmp);
        m.swap(tmp);
        done *= 2;
    }
    return scale * std::pow(l1w_operator_norm(space, m, n), 1.0 / static_cast<double>(k));
}

double gated_spectral_radius(const PositiveOperator& S) {
    const SpectralEstimate est = spectral_radius(S);
    return est.converged ? est.value : spectral_radius_gelfand(S);
}

PositiveVector series_apply(const PowerSeries& F, const PositiveOperator& S,
                            const PositiveVector& f, SeriesOptions opts,
                            bool* result_strictly_positive) {
    detail::require_same_space(*S.space(), *f.space(), "series_apply");
    if (opts.max_terms < 1 || !(opts.term_tol > 0.0))
        throw PreconditionError("series options need max_terms >= 1 and term_tol > 0");
    if (std::isfinite(F.radius)) {
        const double rho = gated_spectral_radius(S);
        if (rho >= F.radius)
            throw SpectralRadiusError("series_apply: spectral radius estimate " +
                                      std::to_string(rho) + " is not below the series radius " +
                                      std::to_string(F.radius));
    }

    const std::size_t n = f.size();
    const auto& space = *S.space();
    std::vector<double> acc(n, 0.0);
    std::vector<double> term(f.entries().begin(), f.entries().end());
    std::vector<double> scaled(n);
    std::vector<double> next(n);

    for (std::size_t j = 0;; ++j) {
        const double coeff = F.coeff(j);
        if (!(coeff >= 0.0) || !std::isfinite(coeff))
            throw PreconditionError("series coefficient " + std::to_string(j) +
                                    " must be non-negative and finite");
        if (coeff != 0.0)
            for (std::size_t i = 0; i < n; ++i) acc[i] += coeff * term[i];

        // peek at the next term to decide whether the tail is negligible
        for (std::size_t i = 0; i < n; ++i) scaled[i] = term[i] * space.weight(i);
        kernels::matvec(S.entries(), n, n, scaled, next);
        term.swap(next);
        const double term_norm = l1w(space, term);
        const double next_norm = F.coeff(j + 1) * term_norm;
        if (!std::isfinite(next_norm))
            throw OverflowError("series_apply: term " + std::to_string(j + 1) + " overflowed");
        if (term_norm == 0.0) break;  // S^(j+1) f vanished, the tail is exactly zero
        if (next_norm < opts.term_tol * l1w(space, acc)) break;
        if (j + 1 >= opts.max_terms)
            throw ConvergenceError("series_apply: no convergence within " +
                                   std::to_string(opts.max_terms) + " terms");
    }

    PositiveVector result(S.space(), std::move(acc));
    if (result_strictly_positive) *result_strictly_positive = is_strictly_positive(result);
    return result;
}

PositiveVector exp_apply(const PositiveOperator& S, const PositiveVector& f, SeriesOptions opts) {
    return series_apply(PowerSeries::exponential(), S, f, opts);
}

PositiveVector resolvent_apply(const PositiveOperator& S, double lambda, const PositiveVector& f,
                               SeriesOptions opts) {
    detail::require_same_space(*S.space(), *f.space(), "resolvent_apply");
    (void)opts;
    if (!std::isfinite(lambda)) throw PreconditionError("resolvent_apply needs finite lambda");
    const double rho = gated_spectral_radius(S);
    if (!(lambda > rho))
        throw SpectralRadiusError("resolvent_apply: lambda = " + std::to_string(lambda) +
                                  " does not exceed the spectral radius estimate " +
                                  std::to_string(rho));

    const std::size_t n = S.size();
    std::vector<double> m = effective_matrix(S);
    for (auto& v : m) v = -v;
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += lambda;

    std::vector<double> g(f.entries().begin(), f.entries().end());
    if (!kernels::solve_in_place(m, n, g))
        throw ConvergenceError("resolvent_apply: singular system");

    // The exact solution is non-negative (Neumann series of non-negative
    // terms); only rounding can dip below zero.
    double peak = 0.0;
    for (double v : g) peak = std::max(peak, std::fabs(v));
    for (auto& v : g) {
        if (v < 0.0) {
            if (v < -1e-9 * std::max(1.0, peak))
                throw ConvergenceError("resolvent_apply: solve produced a negative entry");
            v = 0.0;
        }
    }
    return PositiveVector(S.space(), std::move(g));
}

PositiveVector resolvent_series(const PositiveOperator& S, double lambda, const PositiveVector& f,
                                SeriesOptions opts) {
    return series_apply(PowerSeries::neumann(lambda), S, f, opts);
}

double commuting_preservation_check(const PositiveOperator& K, const PositiveOperator& S,
                                    const ConeCertificate& cert, double tol) {
    detail::require_same_space(*K.space(), *S.space(), "commuting_preservation_check");
    if (cert.operator_digest != S.digest())
        throw PreconditionError("commuting_preservation_check: certificate does not belong to S");
    if (!(tol >= 0.0)) throw PreconditionError("commuting_preservation_check needs tol >= 0");

    const std::size_t n = S.size();
    const std::vector<double> ek = effective_matrix(K);
    const std::vector<double> es = effective_matrix(S);
    std::vector<double> ks(n * n), sk(n * n);
    kernels::matmul(ek, es, n, ks);
    kernels::matmul(es, ek, n, sk);
    double comm = 0.0;
    for (std::size_t idx = 0; idx < ks.size(); ++idx)
        comm = std::max(comm, std::fabs(ks[idx] - sk[idx]));
    if (comm > tol)
        throw PreconditionError("commuting_preservation_check: operators do not commute "
                                "(max-entry commutator " + std::to_string(comm) + ")");

    const PositiveVector kf = apply(K, cert.f);
    if (!is_strictly_positive(kf))
        throw PreconditionError("commuting_preservation_check: Kf is not strictly positive");
    const PositiveVector skf = apply(S, kf);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, std::max(0.0, skf[i] - kf[i]) / std::max(1.0, kf[i]));
    return worst;
}

}  // namespace substoch
