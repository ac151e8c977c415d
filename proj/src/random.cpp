#include "substoch/random.hpp"

#include <cmath>

#include "substoch/kernels.hpp"

namespace substoch {

SpacePtr random_space(Rng& rng, std::size_t n) {
    std::vector<double> w(n);
    for (auto& wi : w) wi = rng.uniform(0.5, 2.0);
    return make_space(std::move(w));
}

PositiveOperator random_substochastic(Rng& rng, SpacePtr space) {
    const std::size_t n = space->size();
    std::vector<double> s(n * n);
    for (auto& v : s) v = rng.uniform();
    for (std::size_t j = 0; j < n; ++j) {
        double mass = 0.0;
        for (std::size_t i = 0; i < n; ++i) mass += s[i * n + j] * space->weight(i);
        const double target = rng.uniform(0.1, 0.95);
        if (mass == 0.0) {
            // all-zero column (possible only for degenerate draws): spread the target mass
            for (std::size_t i = 0; i < n; ++i)
                s[i * n + j] = target / (static_cast<double>(n) * space->weight(i));
        } else {
            const double scale = target / mass;
            for (std::size_t i = 0; i < n; ++i) s[i * n + j] *= scale;
        }
    }
    return PositiveOperator(std::move(space), std::move(s));
}

PositiveVector random_cone_element(Rng& rng, const PositiveOperator& S) {
    const std::size_t n = S.size();
    const auto& space = S.space();
    std::vector<double> f(n);
    for (auto& v : f) v = rng.uniform(0.1, 1.0);
    // (I - S) with the weighted action folded in: m_ij = delta_ij - s_ij w_j
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i * n + j] = (i == j ? 1.0 : 0.0) - S.at(i, j) * space->weight(j);
    if (!kernels::solve_in_place(m, n, f))
        throw ConvergenceError("random_cone_element: singular I - S (generator bug)");
    return PositiveVector(space, std::move(f));
}

PositiveVector random_nonnegative(Rng& rng, SpacePtr space, double lo, double hi) {
    std::vector<double> x(space->size());
    for (auto& v : x) v = rng.uniform(lo, hi);
    return PositiveVector(std::move(space), std::move(x));
}

std::vector<double> random_simplex(Rng& rng, std::size_t m, double min_alpha) {
    std::vector<double> a(m);
    double sum = 0.0;
    for (auto& v : a) {
        v = -std::log(1.0 - rng.uniform());  // Exp(1)
        sum += v;
    }
    for (auto& v : a) v /= sum;
    if (min_alpha > 0.0 && m > 1) {
        double clipped_sum = 0.0;
        for (auto& v : a) {
            v = std::max(v, min_alpha);
            clipped_sum += v;
        }
        for (auto& v : a) v /= clipped_sum;
    }
    return a;
}

}  // namespace substoch
