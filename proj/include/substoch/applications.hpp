#ifndef SUBSTOCH_APPLICATIONS_HPP
#define SUBSTOCH_APPLICATIONS_HPP

#include <string>
#include <vector>

#include "substoch/weighted_space.hpp"

// Economic readings of the machinery: commodity bundles valued at fixed
// prices, preference vectors as geometric means, the open Leontief model,
// and the PageRank steady state.  Both solvers accept arbitrary weights;
// unit weights recover the classical matrix statements.

namespace substoch {

/// Technology matrix, strictly substochastic: every sector runs at a profit.
struct Economy {
    PositiveOperator technology;
    std::vector<std::string> labels;  // optional good names, metadata only

    explicit Economy(PositiveOperator technology_, std::vector<std::string> labels_ = {},
                     double tol = kDefaultTol);
};

struct Bundle {
    PositiveVector amounts;  // the space's weights are the unit prices
};

struct BundleValue {
    double total;    // L1w norm: value of the bundle at the given prices
    double largest;  // LInfW norm: largest single-commodity value
};

BundleValue bundle_value(const Bundle& b);

/// Entrywise prod_i x_i^alpha_i across suppliers; bundles must be strictly
/// positive and the exponents a simplex point with positive entries.
Bundle preference_vector(const std::vector<Bundle>& bundles, std::span<const double> alphas);

/// Supply p with (I - S) p = demand; p >= demand entrywise.
PositiveVector leontief_solve(const Economy& economy, const PositiveVector& demand);

/// Y = (I - S)^-1 as a weighted operator: apply(Y, e_j) is the supply
/// response to a unit demand in good j.
PositiveOperator impact_matrix(const Economy& economy);

/// Steady state p = births + S p of the birth-death surf process.
PositiveVector pagerank_solve(const PositiveOperator& S, const PositiveVector& births,
                              double tol = kDefaultTol);

}  // namespace substoch

#endif
