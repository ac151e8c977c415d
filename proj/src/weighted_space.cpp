#include "substoch/weighted_space.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "substoch/kernels.hpp"

namespace substoch {

namespace detail {

void require_same_space(const WeightedSpace& a, const WeightedSpace& b, std::string_view what) {
    if (!same_space(a, b))
        throw ContractViolation(std::string(what) + ": values live in different weighted spaces");
}

std::uint64_t fnv1a(std::span<const double> data, std::uint64_t h) {
    for (double v : data) {
        unsigned char bytes[sizeof(double)];
        std::memcpy(bytes, &v, sizeof(double));
        for (unsigned char b : bytes) {
            h ^= b;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

}  // namespace detail

WeightedSpace::WeightedSpace(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw PreconditionError("weighted space needs at least one index");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        const double w = weights_[i];
        if (!(w > 0.0) || !std::isfinite(w))
            throw PreconditionError("weight " + std::to_string(i + 1) +
                                    " must be strictly positive and finite, got " +
                                    std::to_string(w));
    }
}

SpacePtr make_space(std::vector<double> weights) {
    return std::make_shared<const WeightedSpace>(std::move(weights));
}

SpacePtr uniform_space(std::size_t n, double weight) {
    return make_space(std::vector<double>(n, weight));
}

bool same_space(const WeightedSpace& a, const WeightedSpace& b) {
    if (&a == &b) return true;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.weight(i) != b.weight(i)) return false;
    return true;
}

PositiveVector::PositiveVector(SpacePtr space, std::vector<double> entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
    if (!space_) throw PreconditionError("vector needs a weighted space");
    if (entries_.size() != space_->size())
        throw ContractViolation("vector has " + std::to_string(entries_.size()) +
                                " entries but the space has " + std::to_string(space_->size()));
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const double v = entries_[i];
        if (!(v >= 0.0) || !std::isfinite(v))
            throw PreconditionError("vector entry " + std::to_string(i + 1) +
                                    " must be non-negative and finite, got " + std::to_string(v));
    }
}

PositiveVector PositiveVector::zeros(SpacePtr space) {
    const std::size_t n = space->size();
    return PositiveVector(std::move(space), std::vector<double>(n, 0.0));
}

PositiveVector PositiveVector::ones(SpacePtr space) {
    const std::size_t n = space->size();
    return PositiveVector(std::move(space), std::vector<double>(n, 1.0));
}

PositiveVector PositiveVector::unit(SpacePtr space, std::size_t i) {
    std::vector<double> e(space->size(), 0.0);
    e.at(i) = 1.0;
    return PositiveVector(std::move(space), std::move(e));
}

PositiveOperator::PositiveOperator(SpacePtr space, std::vector<double> entries)
    : space_(std::move(space)), n_(space_ ? space_->size() : 0), entries_(std::move(entries)) {
    if (!space_) throw PreconditionError("operator needs a weighted space");
    if (entries_.size() != n_ * n_)
        throw ContractViolation("operator matrix must be " + std::to_string(n_) + "x" +
                                std::to_string(n_) + ", got " + std::to_string(entries_.size()) +
                                " entries");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        const double v = entries_[k];
        if (!(v >= 0.0) || !std::isfinite(v))
            throw PreconditionError("matrix entry (" + std::to_string(k / n_ + 1) + "," +
                                    std::to_string(k % n_ + 1) +
                                    ") must be non-negative and finite, got " + std::to_string(v));
    }
    std::uint64_t h = 1469598103934665603ULL ^ (0x9e3779b97f4a7c15ULL * n_);
    h = detail::fnv1a(space_->weights(), h);
    digest_ = detail::fnv1a(entries_, h);
}

PositiveOperator PositiveOperator::zero(SpacePtr space) {
    const std::size_t n = space->size();
    return PositiveOperator(std::move(space), std::vector<double>(n * n, 0.0));
}

PositiveOperator PositiveOperator::identity(SpacePtr space) {
    const std::size_t n = space->size();
    std::vector<double> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
    return PositiveOperator(std::move(space), std::move(e));
}

std::string_view to_string(StochClass c) {
    switch (c) {
        case StochClass::Stochastic: return "Stochastic";
        case StochClass::SubstochasticNotStochastic: return "SubstochasticNotStochastic";
        case StochClass::StrictlySubstochastic: return "StrictlySubstochastic";
        case StochClass::NotSubstochastic: return "NotSubstochastic";
    }
    return "?";
}

NormKind NormKind::lp(double p) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw PreconditionError("LpW norm needs finite p > 1, got " + std::to_string(p));
    return NormKind{Tag::Lp, p};
}

std::string_view NormKind::name() const {
    switch (tag_) {
        case Tag::L1: return "L1w";
        case Tag::LInf: return "LInfW";
        case Tag::Lp: return "LpW";
    }
    return "?";
}

PositiveVector apply(const PositiveOperator& S, const PositiveVector& x) {
    detail::require_same_space(*S.space(), *x.space(), "apply");
    const std::size_t n = S.size();
    std::vector<double> scaled(n);
    for (std::size_t j = 0; j < n; ++j) scaled[j] = x[j] * S.space()->weight(j);
    std::vector<double> y(n);
    kernels::matvec(S.entries(), n, n, scaled, y);
    return PositiveVector(S.space(), std::move(y));
}

PositiveVector column_mass(const PositiveOperator& S) {
    const std::size_t n = S.size();
    std::vector<double> mass(n);
    kernels::matvec_transposed(S.entries(), n, n, S.space()->weights(), mass);
    return PositiveVector(S.space(), std::move(mass));
}

StochClass classify(const PositiveOperator& S, double tol) {
    if (!(tol >= 0.0)) throw PreconditionError("classify needs tol >= 0");
    const PositiveVector mass = column_mass(S);
    bool all_near_one = true;
    bool all_strictly_below = true;
    bool all_at_most_one = true;
    for (std::size_t j = 0; j < mass.size(); ++j) {
        const double s = mass[j];
        if (std::fabs(s - 1.0) > tol) all_near_one = false;
        if (!(s < 1.0 - tol)) all_strictly_below = false;
        if (s > 1.0 + tol) all_at_most_one = false;
    }
    if (all_near_one) return StochClass::Stochastic;
    if (all_strictly_below) return StochClass::StrictlySubstochastic;
    if (all_at_most_one) return StochClass::SubstochasticNotStochastic;
    return StochClass::NotSubstochastic;
}

double norm(const PositiveVector& x, NormKind kind) {
    const auto& w = *x.space();
    switch (kind.tag()) {
        case NormKind::Tag::L1: {
            double acc = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * w.weight(i);
            return acc;
        }
        case NormKind::Tag::LInf: {
            double best = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) best = std::max(best, x[i] * w.weight(i));
            return best;
        }
        case NormKind::Tag::Lp: {
            double acc = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) acc += std::pow(x[i], kind.p()) * w.weight(i);
            return std::pow(acc, 1.0 / kind.p());
        }
    }
    return 0.0;
}

bool is_strictly_positive(const PositiveVector& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] > 0.0)) return false;
    return true;
}

}  // namespace substoch
