#ifndef SUBSTOCH_KERNELS_HPP
#define SUBSTOCH_KERNELS_HPP

#include <cstddef>
#include <span>
#include <vector>

// Dense inner loops, each in two lanes: kernels::serial is the reference
// implementation, kernels::openmp the threaded one.  The unqualified entry
// points dispatch by problem size so small desk-scale calls never pay the
// fork/join cost.  Both lanes sum in the same order per output element, so
// results are bitwise identical and independent of the schedule.

namespace substoch::kernels {

// Elements touched before the openmp lane pays off.
inline constexpr std::size_t kParallelGrain = 32768;

namespace serial {

// y_i = sum_j a[i*cols+j] * x_j
void matvec(std::span<const double> a, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y);

// y_j = sum_i a[i*cols+j] * x_i
void matvec_transposed(std::span<const double> a, std::size_t rows, std::size_t cols,
                       std::span<const double> x, std::span<double> y);

// c = a * b, all square n x n row-major
void matmul(std::span<const double> a, std::span<const double> b, std::size_t n,
            std::span<double> c);

// a_ij += scale * u_i * v_j
void rank_one_update(std::span<double> a, std::size_t n, std::span<const double> u,
                     std::span<const double> v, double scale);

// out_k = exp(sum_i alpha_i * log(f_i[k])); factors with alpha_i == 0 are skipped
void geometric_mean(const std::vector<std::span<const double>>& fs,
                    std::span<const double> alphas, std::span<double> out);

// In-place LU with partial pivoting; perm holds the row swaps.
// Returns false on a zero pivot.
bool lu_factor(std::span<double> a, std::size_t n, std::span<std::size_t> perm);

void lu_solve(std::span<const double> lu, std::size_t n, std::span<const std::size_t> perm,
              std::span<double> b);

}  // namespace serial

namespace openmp {

void matvec(std::span<const double> a, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y);
void matvec_transposed(std::span<const double> a, std::size_t rows, std::size_t cols,
                       std::span<const double> x, std::span<double> y);
void matmul(std::span<const double> a, std::span<const double> b, std::size_t n,
            std::span<double> c);
void rank_one_update(std::span<double> a, std::size_t n, std::span<const double> u,
                     std::span<const double> v, double scale);
void geometric_mean(const std::vector<std::span<const double>>& fs,
                    std::span<const double> alphas, std::span<double> out);
bool lu_factor(std::span<double> a, std::size_t n, std::span<std::size_t> perm);
void lu_solve(std::span<const double> lu, std::size_t n, std::span<const std::size_t> perm,
              std::span<double> b);

}  // namespace openmp

// Size-dispatched entry points.
void matvec(std::span<const double> a, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y);
void matvec_transposed(std::span<const double> a, std::size_t rows, std::size_t cols,
                       std::span<const double> x, std::span<double> y);
void matmul(std::span<const double> a, std::span<const double> b, std::size_t n,
            std::span<double> c);
void rank_one_update(std::span<double> a, std::size_t n, std::span<const double> u,
                     std::span<const double> v, double scale);
void geometric_mean(const std::vector<std::span<const double>>& fs,
                    std::span<const double> alphas, std::span<double> out);
bool lu_factor(std::span<double> a, std::size_t n, std::span<std::size_t> perm);
void lu_solve(std::span<const double> lu, std::size_t n, std::span<const std::size_t> perm,
              std::span<double> b);

// Factor a (destroyed) and overwrite b with the solution of a x = b.
// Returns false if the factorization hit a zero pivot.
bool solve_in_place(std::span<double> a, std::size_t n, std::span<double> b);

}  // namespace substoch::kernels

#endif
