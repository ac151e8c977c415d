#include "substoch/inequalities.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "substoch/kernels.hpp"
#include "substoch/random.hpp"

namespace substoch {

namespace {

// One-sided excess of lhs over rhs, normalized by max(1, rhs).
double excess(double lhs, double rhs) {
    return std::max(0.0, lhs - rhs) / std::max(1.0, rhs);
}

void validate_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw PreconditionError("alpha must lie in the open interval (0,1), got " +
                                std::to_string(alpha));
}

void validate_simplex(std::span<const double> alphas, bool strictly_positive) {
    if (alphas.empty()) throw PreconditionError("exponent tuple must be non-empty");
    double sum = 0.0;
    for (double a : alphas) {
        if (strictly_positive ? !(a > 0.0) : !(a >= 0.0))
            throw PreconditionError(std::string("exponents must be ") +
                                    (strictly_positive ? "> 0" : ">= 0"));
        sum += a;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
        throw PreconditionError("exponents must sum to 1, got " + std::to_string(sum));
}

void validate_family(std::span<const PositiveVector> fs, std::string_view what) {
    if (fs.empty()) throw PreconditionError(std::string(what) + ": needs at least one vector");
    for (std::size_t i = 1; i < fs.size(); ++i)
        detail::require_same_space(*fs[0].space(), *fs[i].space(), what);
}

PositiveVector geomean(std::span<const PositiveVector> fs, std::span<const double> alphas) {
    std::vector<std::span<const double>> columns;
    columns.reserve(fs.size());
    for (const auto& f : fs) columns.push_back(f.entries());
    std::vector<double> h(fs[0].size());
    kernels::geometric_mean(columns, alphas, h);
    return PositiveVector(fs[0].space(), std::move(h));
}

double norm_product(std::span<const double> norms, std::span<const double> alphas) {
    double acc = 1.0;
    for (std::size_t i = 0; i < norms.size(); ++i) acc *= std::pow(norms[i], alphas[i]);
    return acc;
}

PositiveVector family_sum(std::span<const PositiveVector> fs) {
    std::vector<double> s(fs[0].size(), 0.0);
    for (const auto& f : fs)
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += f[k];
    return PositiveVector(fs[0].space(), std::move(s));
}

// sum_i f_i^alpha g_i^(1-alpha), entrywise
PositiveVector mixed_sum(std::span<const PositiveVector> fs, std::span<const PositiveVector> gs,
                         double alpha) {
    std::vector<double> s(fs[0].size(), 0.0);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t k = 0; k < s.size(); ++k)
            s[k] += std::pow(fs[i][k], alpha) * std::pow(gs[i][k], 1.0 - alpha);
    return PositiveVector(fs[0].space(), std::move(s));
}

// F^alpha G^(1-alpha), entrywise
PositiveVector blend(const PositiveVector& F, const PositiveVector& G, double alpha) {
    std::vector<double> b(F.size());
    for (std::size_t k = 0; k < b.size(); ++k)
        b[k] = std::pow(F[k], alpha) * std::pow(G[k], 1.0 - alpha);
    return PositiveVector(F.space(), std::move(b));
}

std::vector<PositiveVector> cert_vectors(std::span<const ConeCertificate> certs) {
    std::vector<PositiveVector> fs;
    fs.reserve(certs.size());
    for (const auto& c : certs) fs.push_back(c.f);
    return fs;
}

void validate_certs(const PositiveOperator& S, std::span<const ConeCertificate> certs,
                    std::string_view what) {
    if (certs.empty())
        throw PreconditionError(std::string(what) + ": needs at least one certificate");
    for (const auto& c : certs)
        if (c.operator_digest != S.digest())
            throw PreconditionError(std::string(what) +
                                    ": certificate does not belong to this operator");
}

}  // namespace

double young_eval(double x, double y, double alpha, double t) {
    if (!(x >= 0.0) || !std::isfinite(x) || !(y >= 0.0) || !std::isfinite(y))
        throw PreconditionError("young_eval needs finite x, y >= 0");
    validate_alpha(alpha);
    if (!(t > 0.0) || !std::isfinite(t)) throw PreconditionError("young_eval needs t > 0");
    return alpha * std::pow(t, 1.0 / alpha) * x +
           (1.0 - alpha) * std::pow(t, -1.0 / (1.0 - alpha)) * y;
}

YoungMin young_argmin(double x, double y, double alpha) {
    if (!(x >= 0.0) || !std::isfinite(x) || !(y >= 0.0) || !std::isfinite(y))
        throw PreconditionError("young_argmin needs finite x, y >= 0");
    validate_alpha(alpha);
    if (x == 0.0 || y == 0.0)
        throw InfimumNotAttained("young_argmin: infimum is 0 but attained by no t > 0");
    return YoungMin{std::pow(y / x, alpha * (1.0 - alpha)),
                    std::pow(x, alpha) * std::pow(y, 1.0 - alpha)};
}

double holder_seminorm_check(std::span<const PositiveVector> fs, std::span<const double> alphas,
                             NormKind kind) {
    validate_family(fs, "holder_seminorm_check");
    if (fs.size() != alphas.size())
        throw PreconditionError("holder_seminorm_check: vector/exponent count mismatch");
    validate_simplex(alphas, /*strictly_positive=*/true);

    const double lhs = norm(geomean(fs, alphas), kind);
    std::vector<double> norms(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) norms[i] = norm(fs[i], kind);
    return excess(lhs, norm_product(norms, alphas));
}

double kernel_holder_check(const PositiveOperator& S, std::span<const PositiveVector> fs,
                           std::span<const double> alphas) {
    validate_family(fs, "kernel_holder_check");
    detail::require_same_space(*S.space(), *fs[0].space(), "kernel_holder_check");
    if (fs.size() != alphas.size())
        throw PreconditionError("kernel_holder_check: vector/exponent count mismatch");
    validate_simplex(alphas, /*strictly_positive=*/true);

    const PositiveVector lhs = apply(S, geomean(fs, alphas));
    std::vector<PositiveVector> images;
    images.reserve(fs.size());
    for (const auto& f : fs) images.push_back(apply(S, f));
    const PositiveVector rhs = geomean(images, alphas);

    double worst = 0.0;
    for (std::size_t k = 0; k < lhs.size(); ++k) worst = std::max(worst, excess(lhs[k], rhs[k]));
    return worst;
}

ChainViolations kernel_seminorm_chain_check(const PositiveOperator& S,
                                            std::span<const PositiveVector> fs,
                                            std::span<const double> alphas, NormKind kind) {
    validate_family(fs, "kernel_seminorm_chain_check");
    detail::require_same_space(*S.space(), *fs[0].space(), "kernel_seminorm_chain_check");
    if (fs.size() != alphas.size())
        throw PreconditionError("kernel_seminorm_chain_check: vector/exponent count mismatch");
    validate_simplex(alphas, /*strictly_positive=*/true);

    const PositiveVector lhs = apply(S, geomean(fs, alphas));
    std::vector<PositiveVector> images;
    images.reserve(fs.size());
    for (const auto& f : fs) images.push_back(apply(S, f));
    const PositiveVector middle = geomean(images, alphas);
    std::vector<double> norms(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) norms[i] = norm(images[i], kind);

    const double n_lhs = norm(lhs, kind);
    const double n_mid = norm(middle, kind);
    return ChainViolations{excess(n_lhs, n_mid), excess(n_mid, norm_product(norms, alphas))};
}

double sum_split_check(std::span<const PositiveVector> fs, std::span<const PositiveVector> gs,
                       double alpha) {
    validate_family(fs, "sum_split_check");
    if (fs.size() != gs.size())
        throw PreconditionError("sum_split_check: needs as many g's as f's");
    detail::require_same_space(*fs[0].space(), *gs[0].space(), "sum_split_check");
    validate_family(gs, "sum_split_check");
    validate_alpha(alpha);

    const PositiveVector lhs = mixed_sum(fs, gs, alpha);
    const PositiveVector rhs = blend(family_sum(fs), family_sum(gs), alpha);
    double worst = 0.0;
    for (std::size_t k = 0; k < lhs.size(); ++k) worst = std::max(worst, excess(lhs[k], rhs[k]));
    return worst;
}

ChainViolations sum_split_seminorm_check(const PositiveOperator& S,
                                         std::span<const PositiveVector> fs,
                                         std::span<const PositiveVector> gs, double alpha,
                                         NormKind kind) {
    validate_family(fs, "sum_split_seminorm_check");
    if (fs.size() != gs.size())
        throw PreconditionError("sum_split_seminorm_check: needs as many g's as f's");
    validate_family(gs, "sum_split_seminorm_check");
    detail::require_same_space(*S.space(), *fs[0].space(), "sum_split_seminorm_check");
    detail::require_same_space(*S.space(), *gs[0].space(), "sum_split_seminorm_check");
    validate_alpha(alpha);

    const PositiveVector F = family_sum(fs);
    const PositiveVector G = family_sum(gs);
    const double n_lhs = norm(apply(S, mixed_sum(fs, gs, alpha)), kind);
    const double n_mid = norm(apply(S, blend(F, G, alpha)), kind);
    const double n_rhs =
        std::pow(norm(apply(S, F), kind), alpha) * std::pow(norm(apply(S, G), kind), 1.0 - alpha);
    return ChainViolations{excess(n_lhs, n_mid), excess(n_mid, n_rhs)};
}

ChainViolations cone_norm_bound_check(const PositiveOperator& S,
                                      std::span<const ConeCertificate> certs,
                                      std::span<const double> alphas, NormKind kind) {
    validate_certs(S, certs, "cone_norm_bound_check");
    if (certs.size() != alphas.size())
        throw PreconditionError("cone_norm_bound_check: certificate/exponent count mismatch");
    validate_simplex(alphas, /*strictly_positive=*/false);

    const std::vector<PositiveVector> fs = cert_vectors(certs);
    const PositiveVector h = geomean(fs, alphas);
    std::vector<double> norms(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) norms[i] = norm(fs[i], kind);

    const double n_sh = norm(apply(S, h), kind);
    const double n_h = norm(h, kind);
    return ChainViolations{excess(n_sh, n_h), excess(n_h, norm_product(norms, alphas))};
}

ChainViolations cone_mixed_bound_check(const PositiveOperator& S,
                                       std::span<const ConeCertificate> f_certs,
                                       std::span<const ConeCertificate> g_certs, double alpha,
                                       NormKind kind) {
    validate_certs(S, f_certs, "cone_mixed_bound_check");
    validate_certs(S, g_certs, "cone_mixed_bound_check");
    if (f_certs.size() != g_certs.size())
        throw PreconditionError("cone_mixed_bound_check: needs as many g's as f's");
    validate_alpha(alpha);

    const std::vector<PositiveVector> fs = cert_vectors(f_certs);
    const std::vector<PositiveVector> gs = cert_vectors(g_certs);
    const PositiveVector F = family_sum(fs);
    const PositiveVector G = family_sum(gs);

    const double n_lhs = norm(apply(S, mixed_sum(fs, gs, alpha)), kind);
    const double n_mid = norm(blend(F, G, alpha), kind);
    const double n_rhs = std::pow(norm(F, kind), alpha) * std::pow(norm(G, kind), 1.0 - alpha);
    return ChainViolations{excess(n_lhs, n_mid), excess(n_mid, n_rhs)};
}

namespace {

constexpr double kGeneratorBug = std::numeric_limits<double>::infinity();

// Non-negative test vector; roughly one entry in ten is exactly zero so the
// lattice-norm checks see the boundary of the cone.
PositiveVector sample_vector(Rng& rng, const SpacePtr& space) {
    std::vector<double> x(space->size());
    for (auto& v : x) {
        v = rng.uniform(0.0, 10.0);
        if (rng.uniform() < 0.1) v = 0.0;
    }
    return PositiveVector(space, std::move(x));
}

std::vector<PositiveVector> sample_family(Rng& rng, const SpacePtr& space, std::size_t m) {
    std::vector<PositiveVector> fs;
    fs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) fs.push_back(sample_vector(rng, space));
    return fs;
}

// Exponents for statements that allow alpha_i = 0: zero one coordinate in
// about a quarter of the draws.
std::vector<double> sample_loose_simplex(Rng& rng, std::size_t m) {
    std::vector<double> a = random_simplex(rng, m, 0.0);
    if (m > 1 && rng.uniform() < 0.25) {
        const std::size_t drop = rng.index(0, m - 1);
        const double rest = 1.0 - a[drop];
        a[drop] = 0.0;
        for (auto& v : a) v /= rest;
        a[drop] = 0.0;
    }
    return a;
}

std::vector<ConeCertificate> sample_certs(Rng& rng, const PositiveOperator& S, std::size_t m,
                                          bool& ok) {
    std::vector<ConeCertificate> certs;
    certs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        ConeCheck check = in_cone(S, random_cone_element(rng, S), kDefaultTol);
        if (!accepted(check)) {
            ok = false;  // generator soundness broken; surface as a loud failure
            return certs;
        }
        certs.push_back(certificate(check));
    }
    ok = true;
    return certs;
}

struct TrialShape {
    std::size_t n;
    std::size_t m;
};

TrialShape sample_shape(Rng& rng, const TrialConfig& c) {
    return TrialShape{rng.index(c.n_min, c.n_max), rng.index(c.m_min, c.m_max)};
}

double trial_young(Rng& rng, const TrialConfig&) {
    const double x = std::pow(10.0, rng.uniform(-3.0, 3.0));
    const double y = std::pow(10.0, rng.uniform(-3.0, 3.0));
    const double alpha = rng.uniform(0.01, 0.99);
    const YoungMin m = young_argmin(x, y, alpha);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double t = std::pow(10.0, rng.uniform(-3.0, 3.0));
        worst = std::max(worst, excess(m.value, young_eval(x, y, alpha, t)));
    }
    return worst;
}

double trial_holder_seminorm(Rng& rng, const TrialConfig& c) {
    const TrialShape shape = sample_shape(rng, c);
    const SpacePtr space = random_space(rng, shape.n);
    const auto fs = sample_family(rng, space, shape.m);
    const auto alphas = random_simplex(rng, shape.m, 1e-3);
    double worst = 0.0;
    for (NormKind kind : c.norm_kinds)
        worst = std::max(worst, holder_seminorm_check(fs, alphas, kind));
    return worst;
}

double trial_kernel_holder(Rng& rng, const TrialConfig& c) {
    const TrialShape shape = sample_shape(rng, c);
    const PositiveOperator S = random_substochastic(rng, random_space(rng, shape.n));
    const auto fs = sample_family(rng, S.space(), shape.m);
    const auto alphas = random_simplex(rng, shape.m, 1e-3);
    return kernel_holder_check(S, fs, alphas);
}

double trial_kernel_seminorm_chain(Rng& rng, const TrialConfig& c) {
    const TrialShape shape = sample_shape(rng, c);
    const PositiveOperator S = random_substochastic(rng, random_space(rng, shape.n));
    const auto fs = sample_family(rng, S.space(), shape.m);
    const auto alphas = random_simplex(rng, shape.m, 1e-3);
    double worst = 0.0;
    for (NormKind kind : c.norm_kinds)
        worst = std::max(worst, kernel_seminorm_chain_check(S, fs, alphas, kind).worst());
    return worst;
}

double trial_sum_split(Rng& rng, const TrialConfig& c) {
    const TrialShape shape = sample_shape(rng, c);
    const SpacePtr space = random_space(rng, shape.n);
    const auto fs = sample_family(rng, space, shape.m);
    const auto gs = sample_family(rng, space, shape.m);
    return sum_split_check(fs, gs, rng.uniform(1e-3, 1.0 - 1e-3));
}

double trial_sum_split_seminorm(Rng& rng, const TrialConfig& c) {
    const TrialShape shape = sample_shape(rng, c);
    const PositiveOperator S = random_substochastic(rng, random_space(rng, shape.n));
    const auto fs = sample_family(rng, S.space(), shape.m);
    const auto gs = sample_family(rng, S.space(), shape.m);
    const double alpha = rng.uniform(1e-3, 1.0 - 1e-3);
    double worst = 0.0;
    for (NormKind kind : c.norm_kinds)
        worst = std::max(worst, sum_split_seminorm_check(S, fs, gs, alpha, kind).worst());
    return worst;
}

double trial_cone_norm_bound(Rng& rng, const TrialConfig& c) {
    const TrialShape shape = sample_shape(rng, c);
    const PositiveOperator S = random_substochastic(rng, random_space(rng, shape.n));
    bool ok = false;
    const auto certs = sample_certs(rng, S, shape.m, ok);
    if (!ok) return kGeneratorBug;
    const auto alphas = sample_loose_simplex(rng, shape.m);
    double worst = 0.0;
    for (NormKind kind : c.norm_kinds)
        worst = std::max(worst, cone_norm_bound_check(S, certs, alphas, kind).worst());
    return worst;
}

double trial_cone_mixed_bound(Rng& rng, const TrialConfig& c) {
    const TrialShape shape = sample_shape(rng, c);
    const PositiveOperator S = random_substochastic(rng, random_space(rng, shape.n));
    bool ok_f = false;
    bool ok_g = false;
    const auto f_certs = sample_certs(rng, S, shape.m, ok_f);
    const auto g_certs = sample_certs(rng, S, shape.m, ok_g);
    if (!ok_f || !ok_g) return kGeneratorBug;
    const double alpha = rng.uniform(1e-3, 1.0 - 1e-3);
    double worst = 0.0;
    for (NormKind kind : c.norm_kinds)
        worst = std::max(worst, cone_mixed_bound_check(S, f_certs, g_certs, alpha, kind).worst());
    return worst;
}

double trial_log_convex_closure(Rng& rng, const TrialConfig& c) {
    const TrialShape shape = sample_shape(rng, c);
    const PositiveOperator S = random_substochastic(rng, random_space(rng, shape.n));
    bool ok = false;
    const auto certs = sample_certs(rng, S, shape.m, ok);
    if (!ok) return kGeneratorBug;
    const auto alphas = sample_loose_simplex(rng, shape.m);
    const ConeCertificate combined = log_convex_combine(S, certs, alphas);
    const PositiveVector sh = apply(S, combined.f);
    double worst = 0.0;
    for (std::size_t k = 0; k < sh.size(); ++k)
        worst = std::max(worst, excess(sh[k], combined.f[k]));
    return worst;
}

double trial_stochastic_completion(Rng& rng, const TrialConfig& c) {
    const TrialShape shape = sample_shape(rng, c);
    const PositiveOperator S = random_substochastic(rng, random_space(rng, shape.n));
    bool ok = false;
    const auto certs = sample_certs(rng, S, 1, ok);
    if (!ok) return kGeneratorBug;
    const Completion comp = stochastic_completion(S, certs[0]);

    double worst = 0.0;
    const PositiveVector mass = column_mass(comp.A);
    for (std::size_t j = 0; j < mass.size(); ++j)
        worst = std::max(worst, std::fabs(mass[j] - 1.0));
    const PositiveVector af = apply(comp.A, certs[0].f);
    for (std::size_t i = 0; i < af.size(); ++i)
        worst = std::max(worst,
                         std::fabs(af[i] - certs[0].f[i]) / std::max(1.0, certs[0].f[i]));
    double phi_mass = 0.0;
    for (std::size_t i = 0; i < comp.phi.size(); ++i)
        phi_mass += comp.phi[i] * S.space()->weight(i);
    worst = std::max(worst, std::fabs(comp.lambda - phi_mass) / std::max(1.0, comp.lambda));
    for (std::size_t k = 0; k < S.entries().size(); ++k)
        worst = std::max(worst, S.entries()[k] - comp.A.entries()[k]);
    return worst;
}

using TrialFn = double (*)(Rng&, const TrialConfig&);

PropertyReport run_property(const std::string& name, const TrialConfig& config, TrialFn trial) {
    const auto trials = static_cast<long long>(config.trials);
    double worst = -1.0;
    std::size_t worst_index = 0;
    std::size_t failures = 0;

#pragma omp parallel
    {
        double my_worst = -1.0;
        std::size_t my_index = 0;
        std::size_t my_failures = 0;
#pragma omp for schedule(static) nowait
        for (long long k = 0; k < trials; ++k) {
            Rng rng(config.seed ^ static_cast<std::uint64_t>(k));
            double violation;
            try {
                violation = trial(rng, config);
            } catch (const Error&) {
                violation = kGeneratorBug;  // a theorem check must never throw on valid input
            }
            if (violation > config.tol) ++my_failures;
            if (violation > my_worst) {
                my_worst = violation;
                my_index = static_cast<std::size_t>(k);
            }
        }
#pragma omp critical
        {
            failures += my_failures;
            if (my_worst > worst || (my_worst == worst && my_index < worst_index)) {
                worst = my_worst;
                worst_index = my_index;
            }
        }
    }

    PropertyReport report;
    report.property_name = name;
    report.trials_run = config.trials;
    report.failures = failures;
    report.worst_violation = std::max(worst, 0.0);
    report.worst_seed = config.seed ^ static_cast<std::uint64_t>(worst_index);
    report.pass = failures == 0;
    return report;
}

}  // namespace

std::vector<PropertyReport> run_property_suite(const TrialConfig& config) {
    if (config.trials < 1) throw PreconditionError("property suite needs trials >= 1");
    if (!(config.tol > 0.0)) throw PreconditionError("property suite needs tol > 0");
    if (config.n_min < 1 || config.n_min > config.n_max)
        throw PreconditionError("property suite needs 1 <= n_min <= n_max");
    if (config.m_min < 1 || config.m_min > config.m_max)
        throw PreconditionError("property suite needs 1 <= m_min <= m_max");
    if (config.norm_kinds.empty())
        throw PreconditionError("property suite needs at least one norm kind");

    std::vector<PropertyReport> reports;
    reports.push_back(run_property("young_sharpened", config, &trial_young));
    reports.push_back(run_property("holder_seminorm", config, &trial_holder_seminorm));
    reports.push_back(run_property("kernel_holder", config, &trial_kernel_holder));
    reports.push_back(run_property("kernel_seminorm_chain", config, &trial_kernel_seminorm_chain));
    reports.push_back(run_property("sum_split", config, &trial_sum_split));
    reports.push_back(run_property("sum_split_seminorm", config, &trial_sum_split_seminorm));
    reports.push_back(run_property("cone_norm_bound", config, &trial_cone_norm_bound));
    reports.push_back(run_property("cone_mixed_bound", config, &trial_cone_mixed_bound));
    reports.push_back(run_property("log_convex_closure", config, &trial_log_convex_closure));
    reports.push_back(run_property("stochastic_completion", config, &trial_stochastic_completion));
    return reports;
}

std::string format_report(const PropertyReport& report) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %s trials=%zu worst=%.17g seed=%llu",
                  report.pass ? "PASS" : "FAIL", report.property_name.c_str(),
                  report.trials_run, report.worst_violation,
                  static_cast<unsigned long long>(report.worst_seed));
    return std::string(buf);
}

}  // namespace substoch
