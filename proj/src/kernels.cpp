#include "substoch/kernels.hpp"

#include <cmath>
#include <utility>

namespace substoch::kernels {

namespace serial {

void matvec(std::span<const double> a, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < rows; ++i) {
        const double* row = a.data() + i * cols;
        double acc = 0.0;
        for (std::size_t j = 0; j < cols; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

void matvec_transposed(std::span<const double> a, std::size_t rows, std::size_t cols,
                       std::span<const double> x, std::span<double> y) {
    for (std::size_t j = 0; j < cols; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rows; ++i) acc += a[i * cols + j] * x[i];
        y[j] = acc;
    }
}

void matmul(std::span<const double> a, std::span<const double> b, std::size_t n,
            std::span<double> c) {
    for (std::size_t i = 0; i < n; ++i) {
        double* crow = c.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i * n + k];
            if (aik == 0.0) continue;
            const double* brow = b.data() + k * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

void rank_one_update(std::span<double> a, std::size_t n, std::span<const double> u,
                     std::span<const double> v, double scale) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ui = scale * u[i];
        double* row = a.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) row[j] += ui * v[j];
    }
}

void geometric_mean(const std::vector<std::span<const double>>& fs,
                    std::span<const double> alphas, std::span<double> out) {
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) {
        double logsum = 0.0;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (alphas[i] == 0.0) continue;  // 0 * log(0) must not poison the sum
            logsum += alphas[i] * std::log(fs[i][k]);
        }
        out[k] = std::exp(logsum);
    }
}

bool lu_factor(std::span<double> a, std::size_t n, std::span<std::size_t> perm) {
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::fabs(a[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::fabs(a[i * n + k]);
            if (cand > best) {
                best = cand;
                pivot = i;
            }
        }
        if (best == 0.0) return false;
        perm[k] = pivot;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
        }
        const double inv = 1.0 / a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const double lik = a[i * n + k] * inv;
            a[i * n + k] = lik;
            if (lik == 0.0) continue;
            const double* krow = a.data() + k * n;
            double* irow = a.data() + i * n;
            for (std::size_t j = k + 1; j < n; ++j) irow[j] -= lik * krow[j];
        }
    }
    return true;
}

void lu_solve(std::span<const double> lu, std::size_t n, std::span<const std::size_t> perm,
              std::span<double> b) {
    // The factorization swaps whole rows, L part included, so every
    // interchange must hit b before the forward sweep starts.
    for (std::size_t k = 0; k < n; ++k)
        if (perm[k] != k) std::swap(b[k], b[perm[k]]);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = k + 1; i < n; ++i) b[i] -= lu[i * n + k] * b[k];
    for (std::size_t k = n; k-- > 0;) {
        double acc = b[k];
        const double* row = lu.data() + k * n;
        for (std::size_t j = k + 1; j < n; ++j) acc -= row[j] * b[j];
        b[k] = acc / row[k];
    }
}

}  // namespace serial

namespace openmp {

// std::size_t loop indices upset some OpenMP implementations; use long long.
using omp_index = long long;

void matvec(std::span<const double> a, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y) {
    const auto nr = static_cast<omp_index>(rows);
#pragma omp parallel for schedule(static)
    for (omp_index i = 0; i < nr; ++i) {
        const double* row = a.data() + static_cast<std::size_t>(i) * cols;
        double acc = 0.0;
        for (std::size_t j = 0; j < cols; ++j) acc += row[j] * x[j];
        y[static_cast<std::size_t>(i)] = acc;
    }
}

void matvec_transposed(std::span<const double> a, std::size_t rows, std::size_t cols,
                       std::span<const double> x, std::span<double> y) {
    const auto nc = static_cast<omp_index>(cols);
#pragma omp parallel for schedule(static)
    for (omp_index j = 0; j < nc; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rows; ++i)
            acc += a[i * cols + static_cast<std::size_t>(j)] * x[i];
        y[static_cast<std::size_t>(j)] = acc;
    }
}

void matmul(std::span<const double> a, std::span<const double> b, std::size_t n,
            std::span<double> c) {
    const auto nr = static_cast<omp_index>(n);
#pragma omp parallel for schedule(static)
    for (omp_index ii = 0; ii < nr; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        double* crow = c.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i * n + k];
            if (aik == 0.0) continue;
            const double* brow = b.data() + k * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

void rank_one_update(std::span<double> a, std::size_t n, std::span<const double> u,
                     std::span<const double> v, double scale) {
    const auto nr = static_cast<omp_index>(n);
#pragma omp parallel for schedule(static)
    for (omp_index ii = 0; ii < nr; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        const double ui = scale * u[i];
        double* row = a.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) row[j] += ui * v[j];
    }
}

void geometric_mean(const std::vector<std::span<const double>>& fs,
                    std::span<const double> alphas, std::span<double> out) {
    const auto n = static_cast<omp_index>(out.size());
#pragma omp parallel for schedule(static)
    for (omp_index kk = 0; kk < n; ++kk) {
        const auto k = static_cast<std::size_t>(kk);
        double logsum = 0.0;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (alphas[i] == 0.0) continue;
            logsum += alphas[i] * std::log(fs[i][k]);
        }
        out[k] = std::exp(logsum);
    }
}

bool lu_factor(std::span<double> a, std::size_t n, std::span<std::size_t> perm) {
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::fabs(a[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::fabs(a[i * n + k]);
            if (cand > best) {
                best = cand;
                pivot = i;
            }
        }
        if (best == 0.0) return false;
        perm[k] = pivot;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
        }
        const double inv = 1.0 / a[k * n + k];
        const double* krow = a.data() + k * n;
        const auto lo = static_cast<omp_index>(k + 1);
        const auto hi = static_cast<omp_index>(n);
#pragma omp parallel for schedule(static)
        for (omp_index ii = lo; ii < hi; ++ii) {
            const auto i = static_cast<std::size_t>(ii);
            const double lik = a[i * n + k] * inv;
            a[i * n + k] = lik;
            if (lik == 0.0) continue;
            double* irow = a.data() + i * n;
            for (std::size_t j = k + 1; j < n; ++j) irow[j] -= lik * krow[j];
        }
    }
    return true;
}

void lu_solve(std::span<const double> lu, std::size_t n, std::span<const std::size_t> perm,
              std::span<double> b) {
    // Triangular sweeps carry a loop dependence; keep the serial reference.
    serial::lu_solve(lu, n, perm, b);
}

}  // namespace openmp

void matvec(std::span<const double> a, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y) {
    if (rows * cols >= kParallelGrain)
        openmp::matvec(a, rows, cols, x, y);
    else
        serial::matvec(a, rows, cols, x, y);
}

void matvec_transposed(std::span<const double> a, std::size_t rows, std::size_t cols,
                       std::span<const double> x, std::span<double> y) {
    if (rows * cols >= kParallelGrain)
        openmp::matvec_transposed(a, rows, cols, x, y);
    else
        serial::matvec_transposed(a, rows, cols, x, y);
}

void matmul(std::span<const double> a, std::span<const double> b, std::size_t n,
            std::span<double> c) {
    if (n * n >= kParallelGrain)
        openmp::matmul(a, b, n, c);
    else
        serial::matmul(a, b, n, c);
}

void rank_one_update(std::span<double> a, std::size_t n, std::span<const double> u,
                     std::span<const double> v, double scale) {
    if (n * n >= kParallelGrain)
        openmp::rank_one_update(a, n, u, v, scale);
    else
        serial::rank_one_update(a, n, u, v, scale);
}

void geometric_mean(const std::vector<std::span<const double>>& fs,
                    std::span<const double> alphas, std::span<double> out) {
    if (out.size() * (fs.size() + 4) >= kParallelGrain)
        openmp::geometric_mean(fs, alphas, out);
    else
        serial::geometric_mean(fs, alphas, out);
}

bool lu_factor(std::span<double> a, std::size_t n, std::span<std::size_t> perm) {
    if (n * n >= kParallelGrain) return openmp::lu_factor(a, n, perm);
    return serial::lu_factor(a, n, perm);
}

void lu_solve(std::span<const double> lu, std::size_t n, std::span<const std::size_t> perm,
              std::span<double> b) {
    serial::lu_solve(lu, n, perm, b);
}

bool solve_in_place(std::span<double> a, std::size_t n, std::span<double> b) {
    std::vector<std::size_t> perm(n);
    if (!lu_factor(a, n, perm)) return false;
    lu_solve(a, n, perm, b);
    return true;
}

}  // namespace substoch::kernels
