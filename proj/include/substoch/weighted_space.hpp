#ifndef SUBSTOCH_WEIGHTED_SPACE_HPP
#define SUBSTOCH_WEIGHTED_SPACE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "substoch/errors.hpp"

namespace substoch {

// Default relative comparison tolerance, taken against max(1, |compared side|).
inline constexpr double kDefaultTol = 1e-12;

/// Finite index set {1..n} with strictly positive point masses w_i.
class WeightedSpace {
public:
    explicit WeightedSpace(std::vector<double> weights);

    std::size_t size() const { return weights_.size(); }
    double weight(std::size_t i) const { return weights_[i]; }
    std::span<const double> weights() const { return weights_; }

private:
    std::vector<double> weights_;
};

using SpacePtr = std::shared_ptr<const WeightedSpace>;

SpacePtr make_space(std::vector<double> weights);
SpacePtr uniform_space(std::size_t n, double weight = 1.0);

// Same object or identical weight vectors.
bool same_space(const WeightedSpace& a, const WeightedSpace& b);

/// Element of the non-negative cone: finite entries, all >= 0.
class PositiveVector {
public:
    PositiveVector(SpacePtr space, std::vector<double> entries);

    static PositiveVector zeros(SpacePtr space);
    static PositiveVector ones(SpacePtr space);
    /// Standard basis vector e_i.
    static PositiveVector unit(SpacePtr space, std::size_t i);

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    std::span<const double> entries() const { return entries_; }
    const SpacePtr& space() const { return space_; }

private:
    SpacePtr space_;
    std::vector<double> entries_;
};

/// Non-negative n x n matrix acting as (Sx)_i = sum_j s_ij x_j w_j.
class PositiveOperator {
public:
    PositiveOperator(SpacePtr space, std::vector<double> entries);

    static PositiveOperator zero(SpacePtr space);
    static PositiveOperator identity(SpacePtr space);

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::span<const double> entries() const { return entries_; }
    const SpacePtr& space() const { return space_; }

    /// Hash binding certificates to the exact (weights, entries) pair.
    std::uint64_t digest() const { return digest_; }

private:
    SpacePtr space_;
    std::size_t n_;
    std::vector<double> entries_;
    std::uint64_t digest_;
};

enum class StochClass {
    Stochastic,
    SubstochasticNotStochastic,
    StrictlySubstochastic,
    NotSubstochastic,
};

std::string_view to_string(StochClass c);

/// Lattice norm selector: L1w, LInfW, or LpW with finite p > 1.
class NormKind {
public:
    enum class Tag { L1, LInf, Lp };

    static NormKind l1() { return NormKind{Tag::L1, 1.0}; }
    static NormKind linf() { return NormKind{Tag::LInf, 0.0}; }
    static NormKind lp(double p);

    Tag tag() const { return tag_; }
    double p() const { return p_; }
    std::string_view name() const;

private:
    NormKind(Tag tag, double p) : tag_(tag), p_(p) {}
    Tag tag_;
    double p_;
};

/// y_i = sum_j s_ij x_j w_j
PositiveVector apply(const PositiveOperator& S, const PositiveVector& x);

/// s_j = sum_i s_ij w_i
PositiveVector column_mass(const PositiveOperator& S);

/// Most specific of: stochastic, strictly substochastic, substochastic, none.
StochClass classify(const PositiveOperator& S, double tol = kDefaultTol);

double norm(const PositiveVector& x, NormKind kind);

/// True iff every entry is > 0 (exact, not thresholded).
bool is_strictly_positive(const PositiveVector& x);

// Shared helpers for modules building on this one.
namespace detail {
void require_same_space(const WeightedSpace& a, const WeightedSpace& b, std::string_view what);
std::uint64_t fnv1a(std::span<const double> data, std::uint64_t h);
}  // namespace detail

}  // namespace substoch

#endif
