#include "substoch/kernel_bridge.hpp"

#include <cmath>

#include "substoch/inequalities.hpp"

namespace substoch {

namespace {

std::vector<std::function<double(double)>> default_samplers() {
    return {
        [](double) { return 1.0; },
        [](double x) { return 0.5 + x; },
        [](double x) { return std::exp(-x); },
    };
}

}  // namespace

KernelSpec KernelSpec::named(const std::string& spec, std::size_t grid_n) {
    KernelSpec out;
    out.name = spec;
    out.grid_n = grid_n;
    out.samplers = default_samplers();
    if (spec.rfind("const:", 0) == 0) {
        const std::string arg = spec.substr(6);
        std::size_t used = 0;
        double c = 0.0;
        try {
            c = std::stod(arg, &used);
        } catch (const std::exception&) {
            throw PreconditionError("kernel 'const:<c>' needs a numeric constant, got '" +
                                    arg + "'");
        }
        if (used != arg.size() || !(c >= 0.0) || !std::isfinite(c))
            throw PreconditionError("kernel 'const:<c>' needs a finite constant >= 0, got '" +
                                    arg + "'");
        out.k = [c](double, double) { return c; };
        out.exact_column_mass = [c](double) { return c; };
    } else if (spec == "sum") {
        out.k = [](double x, double y) { return x + y; };
        out.exact_column_mass = [](double y) { return 0.5 + y; };
    } else if (spec == "product") {
        out.k = [](double x, double y) { return x * y; };
        out.exact_column_mass = [](double y) { return 0.5 * y; };
    } else if (spec == "quadratic") {
        out.k = [](double x, double y) { return 0.25 * (x * x + y * y); };
        out.exact_column_mass = [](double y) { return 1.0 / 12.0 + 0.25 * y * y; };
    } else {
        throw PreconditionError("unknown kernel '" + spec +
                                "'; built-ins are const:<c>, sum, product, quadratic");
    }
    return out;
}

Discretization discretize(const KernelSpec& spec) {
    if (!spec.k) throw PreconditionError("discretize: kernel spec has no kernel");
    if (spec.grid_n < 1) throw PreconditionError("discretize: needs at least one node");
    const std::size_t n = spec.grid_n;
    const double h = 1.0 / static_cast<double>(n);

    std::vector<double> nodes(n);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = (static_cast<double>(i) + 0.5) * h;

    std::vector<double> s(n * n);
    // node evaluations are independent; k must be a pure map
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = 0; j < n; ++j) s[i * n + j] = spec.k(nodes[i], nodes[j]);
    }
    for (std::size_t idx = 0; idx < s.size(); ++idx) {
        if (!(s[idx] >= 0.0) || !std::isfinite(s[idx]))
            throw PreconditionError("discretize: kernel sample at node pair (" +
                                    std::to_string(idx / n + 1) + "," +
                                    std::to_string(idx % n + 1) +
                                    ") is negative or not finite");
    }
    SpacePtr space = uniform_space(n, h);
    return Discretization{space, PositiveOperator(space, std::move(s)), std::move(nodes)};
}

Completion completion_demo(const KernelSpec& spec) {
    const Discretization disc = discretize(spec);
    const StochClass cls = classify(disc.op);
    if (cls == StochClass::Stochastic)
        throw StochasticOperatorError("completion_demo: discretized kernel is stochastic, "
                                      "nothing to complete");
    if (cls == StochClass::NotSubstochastic)
        throw PreconditionError("completion_demo: discretized kernel is not substochastic");
    const ConeCheck check = in_cone(disc.op, PositiveVector::ones(disc.space));
    if (!accepted(check))
        throw PreconditionError("completion_demo: the constant function 1 is not in the "
                                "cone of the discretized operator");
    return stochastic_completion(disc.op, certificate(check));
}

std::vector<RefinementRow> refinement_study(const KernelSpec& spec,
                                            std::span<const std::size_t> grid_sizes) {
    if (!spec.exact_column_mass)
        throw PreconditionError("refinement_study: spec has no exact column mass");
    if (spec.samplers.empty())
        throw PreconditionError("refinement_study: spec has no sampler functions");

    std::vector<RefinementRow> rows;
    rows.reserve(grid_sizes.size());
    for (std::size_t n : grid_sizes) {
        KernelSpec at_n = spec;
        at_n.grid_n = n;
        const Discretization disc = discretize(at_n);

        const PositiveVector mass = column_mass(disc.op);
        double err = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            err = std::max(err, std::fabs(mass[j] - spec.exact_column_mass(disc.nodes[j])));

        std::vector<PositiveVector> fs;
        fs.reserve(spec.samplers.size());
        for (const auto& sampler : spec.samplers) {
            std::vector<double> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = sampler(disc.nodes[i]);
            fs.emplace_back(disc.space, std::move(v));
        }
        const std::vector<double> alphas(fs.size(), 1.0 / static_cast<double>(fs.size()));
        double worst = kernel_holder_check(disc.op, fs, alphas);
        for (NormKind kind : {NormKind::l1(), NormKind::linf()}) {
            worst = std::max(worst, kernel_seminorm_chain_check(disc.op, fs, alphas, kind).worst());
            worst = std::max(worst, sum_split_seminorm_check(disc.op, fs, fs, 0.5, kind).worst());
        }
        rows.push_back(RefinementRow{n, err, worst});
    }
    return rows;
}

}  // namespace substoch
