#ifndef SUBSTOCH_KERNEL_BRIDGE_HPP
#define SUBSTOCH_KERNEL_BRIDGE_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "substoch/cone.hpp"
#include "substoch/weighted_space.hpp"

// Bridge from continuous kernels k(x,y) on [0,1]^2 to the weighted-matrix
// setting: composite midpoint quadrature with nodes x_i = (i - 1/2)/n and
// weights 1/n.  The discretized operator then feeds every cone, inequality,
// and transform operation unchanged.

namespace substoch {

struct KernelSpec {
    std::string name;
    std::function<double(double, double)> k;  // must be >= 0 on the grid
    std::size_t grid_n = 16;
    /// Exact column mass s(y) = integral of k(x,y) dx when known; refinement
    /// studies need it.
    std::function<double(double)> exact_column_mass;
    /// Test functions sampled at the nodes for the inequality spot checks.
    std::vector<std::function<double(double)>> samplers;

    /// Built-in kernels: "const:<c>", "sum" (x+y), "product" (x*y),
    /// "quadratic" ((x^2+y^2)/4).  All ship exact column masses and a
    /// default sampler family.
    static KernelSpec named(const std::string& spec, std::size_t grid_n);
};

struct Discretization {
    SpacePtr space;       // weights 1/n
    PositiveOperator op;  // s_ij = k(x_i, x_j)
    std::vector<double> nodes;
};

Discretization discretize(const KernelSpec& spec);

/// Completion of the discretized operator at f = 1 sampled on the nodes.
/// For k = 1/2 this reproduces the constant completion a = 1 at every node
/// pair, matching the continuous construction.
Completion completion_demo(const KernelSpec& spec);

struct RefinementRow {
    std::size_t n;
    double column_mass_error;  // max_j |column_mass_j - s(y_j)|
    double worst_violation;    // worst inequality excess over the sampler family
};

/// Midpoint-rule convergence table; for smooth kernels the column-mass error
/// decays as O(n^-2).
std::vector<RefinementRow> refinement_study(const KernelSpec& spec,
                                            std::span<const std::size_t> grid_sizes);

}  // namespace substoch

#endif
