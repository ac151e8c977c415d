#include "substoch/applications.hpp"

#include <cmath>

#include "substoch/kernels.hpp"

namespace substoch {

namespace {

// Solve (I - S_w) p = rhs for the weighted action, clamping rounding-level
// negative entries; the exact solution is non-negative by the Neumann series.
PositiveVector solve_leontief_system(const PositiveOperator& S, const PositiveVector& rhs,
                                     std::string_view what) {
    detail::require_same_space(*S.space(), *rhs.space(), what);
    const std::size_t n = S.size();
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i * n + j] = (i == j ? 1.0 : 0.0) - S.at(i, j) * S.space()->weight(j);
    std::vector<double> p(rhs.entries().begin(), rhs.entries().end());
    if (!kernels::solve_in_place(m, n, p))
        throw ConvergenceError(std::string(what) + ": singular I - S");
    double peak = 0.0;
    for (double v : p) peak = std::max(peak, std::fabs(v));
    for (auto& v : p) {
        if (v < 0.0) {
            if (v < -1e-9 * std::max(1.0, peak))
                throw ConvergenceError(std::string(what) + ": solve produced a negative entry");
            v = 0.0;
        }
    }
    return PositiveVector(S.space(), std::move(p));
}

}  // namespace

Economy::Economy(PositiveOperator technology_, std::vector<std::string> labels_, double tol)
    : technology(std::move(technology_)), labels(std::move(labels_)) {
    if (!labels.empty() && labels.size() != technology.size())
        throw PreconditionError("economy labels must be empty or one per good");
    if (classify(technology, tol) != StochClass::StrictlySubstochastic)
        throw PreconditionError(
            "economy needs a strictly substochastic technology matrix (every sector must "
            "cost less than one unit to produce one unit)");
}

BundleValue bundle_value(const Bundle& b) {
    return BundleValue{norm(b.amounts, NormKind::l1()), norm(b.amounts, NormKind::linf())};
}

Bundle preference_vector(const std::vector<Bundle>& bundles, std::span<const double> alphas) {
    if (bundles.empty()) throw PreconditionError("preference_vector needs at least one bundle");
    if (bundles.size() != alphas.size())
        throw PreconditionError("preference_vector: bundle/exponent count mismatch");
    double sum = 0.0;
    for (double a : alphas) {
        if (!(a > 0.0)) throw PreconditionError("preference_vector: exponents must be > 0");
        sum += a;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
        throw PreconditionError("preference_vector: exponents must sum to 1");
    std::vector<std::span<const double>> columns;
    columns.reserve(bundles.size());
    for (const auto& b : bundles) {
        detail::require_same_space(*bundles[0].amounts.space(), *b.amounts.space(),
                                   "preference_vector");
        if (!is_strictly_positive(b.amounts))
            throw PreconditionError("preference_vector: bundles must be strictly positive");
        columns.push_back(b.amounts.entries());
    }
    std::vector<double> pref(bundles[0].amounts.size());
    kernels::geometric_mean(columns, alphas, pref);
    return Bundle{PositiveVector(bundles[0].amounts.space(), std::move(pref))};
}

PositiveVector leontief_solve(const Economy& economy, const PositiveVector& demand) {
    return solve_leontief_system(economy.technology, demand, "leontief_solve");
}

PositiveOperator impact_matrix(const Economy& economy) {
    const PositiveOperator& S = economy.technology;
    const std::size_t n = S.size();
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i * n + j] = (i == j ? 1.0 : 0.0) - S.at(i, j) * S.space()->weight(j);
    std::vector<std::size_t> perm(n);
    if (!kernels::lu_factor(m, n, perm))
        throw ConvergenceError("impact_matrix: singular I - S");

    // Column j of (I - S)^-1 is the unit-demand solve; dividing by w_j makes
    // the weighted action of Y reproduce it exactly.
    std::vector<double> y(n * n);
    std::vector<double> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) col[i] = (i == j) ? 1.0 : 0.0;
        kernels::lu_solve(m, n, perm, col);
        const double inv_w = 1.0 / S.space()->weight(j);
        for (std::size_t i = 0; i < n; ++i) y[i * n + j] = std::max(col[i], 0.0) * inv_w;
    }
    return PositiveOperator(S.space(), std::move(y));
}

PositiveVector pagerank_solve(const PositiveOperator& S, const PositiveVector& births,
                              double tol) {
    if (classify(S, tol) != StochClass::StrictlySubstochastic)
        throw PreconditionError("pagerank_solve needs a strictly substochastic transition "
                                "matrix (positive probability of logging off)");
    return solve_leontief_system(S, births, "pagerank_solve");
}

}  // namespace substoch
