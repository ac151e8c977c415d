#include "substoch/cone.hpp"

#include <cmath>
#include <string>

#include "substoch/kernels.hpp"

namespace substoch {

namespace {

void require_bound(const PositiveOperator& S, const ConeCertificate& cert,
                   std::string_view what) {
    if (cert.operator_digest != S.digest())
        throw ContractViolation(std::string(what) +
                                ": certificate was issued for a different operator");
}

}  // namespace

bool accepted(const ConeCheck& c) { return std::holds_alternative<ConeCertificate>(c); }

const ConeCertificate& certificate(const ConeCheck& c) {
    if (!accepted(c)) throw ContractViolation("cone check was a rejection, no certificate");
    return std::get<ConeCertificate>(c);
}

const ConeRejection& rejection(const ConeCheck& c) {
    if (accepted(c)) throw ContractViolation("cone check was accepted, no rejection");
    return std::get<ConeRejection>(c);
}

ConeCheck in_cone(const PositiveOperator& S, const PositiveVector& f, double tol) {
    detail::require_same_space(*S.space(), *f.space(), "in_cone");
    if (!(tol >= 0.0)) throw PreconditionError("in_cone needs tol >= 0");
    const StochClass cls = classify(S, tol);
    if (cls == StochClass::Stochastic)
        throw PreconditionError("in_cone: operator is stochastic; the wedge C(S) is only "
                                "defined for substochastic operators that are not stochastic");
    if (cls == StochClass::NotSubstochastic)
        throw PreconditionError("in_cone: operator is not substochastic (a column mass "
                                "exceeds 1)");

    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!(f[i] > 0.0))
            return ConeRejection{ConeRejection::Reason::NotStrictlyPositive, i,
                                 std::fabs(f[i])};
    }

    const PositiveVector sf = apply(S, f);
    std::vector<double> slack(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double excess = sf[i] - f[i];
        if (excess > tol * std::max(1.0, f[i]))
            return ConeRejection{ConeRejection::Reason::DominanceViolated, i, excess};
        slack[i] = std::max(f[i] - sf[i], 0.0);
    }
    return ConeCertificate{f, PositiveVector(f.space(), std::move(slack)), S.digest(), tol};
}

Completion stochastic_completion(const PositiveOperator& S, const ConeCertificate& cert) {
    require_bound(S, cert, "stochastic_completion");
    const std::size_t n = S.size();
    const auto& space = S.space();

    const PositiveVector mass = column_mass(S);
    std::vector<double> psi(n);
    for (std::size_t j = 0; j < n; ++j) psi[j] = std::max(1.0 - mass[j], 0.0);

    double lambda = 0.0;
    for (std::size_t j = 0; j < n; ++j) lambda += psi[j] * cert.f[j] * space->weight(j);
    if (!std::isfinite(lambda))
        throw OverflowError("stochastic_completion: lambda overflowed");
    if (lambda <= cert.tol)
        throw StochasticOperatorError(
            "stochastic_completion: operator is stochastic up to tolerance (lambda = " +
            std::to_string(lambda) + "), completion undefined");

    std::vector<double> a(S.entries().begin(), S.entries().end());
    kernels::rank_one_update(a, n, cert.slack.entries(), psi, 1.0 / lambda);

    return Completion{PositiveOperator(space, std::move(a)), cert.slack,
                      PositiveVector(space, std::move(psi)), lambda};
}

ConeCertificate wedge_add(const PositiveOperator& S, const ConeCertificate& c1,
                          const ConeCertificate& c2) {
    require_bound(S, c1, "wedge_add");
    require_bound(S, c2, "wedge_add");
    std::vector<double> sum(c1.f.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = c1.f[i] + c2.f[i];
    const double tol = std::max(c1.tol, c2.tol);
    ConeCheck check = in_cone(S, PositiveVector(c1.f.space(), std::move(sum)), tol);
    if (!accepted(check)) {
        const auto& r = rejection(check);
        throw InternalConsistencyError(
            "wedge_add: sum of cone elements failed re-verification at entry " +
            std::to_string(r.index + 1) + " (violation " + std::to_string(r.violation) + ")");
    }
    return certificate(check);
}

ConeCertificate wedge_scale(const ConeCertificate& cert, double a) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw PreconditionError("wedge_scale needs a finite factor a > 0");
    std::vector<double> f(cert.f.size()), slack(cert.f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = a * cert.f[i];
        slack[i] = a * cert.slack[i];
    }
    return ConeCertificate{PositiveVector(cert.f.space(), std::move(f)),
                           PositiveVector(cert.f.space(), std::move(slack)),
                           cert.operator_digest, cert.tol};
}

ConeCertificate log_convex_combine(const PositiveOperator& S,
                                   std::span<const ConeCertificate> certs,
                                   std::span<const double> alphas) {
    if (certs.empty()) throw PreconditionError("log_convex_combine needs at least one factor");
    if (certs.size() != alphas.size())
        throw PreconditionError("log_convex_combine: got " + std::to_string(certs.size()) +
                                " certificates but " + std::to_string(alphas.size()) +
                                " exponents");
    double tol = 0.0;
    double alpha_sum = 0.0;
    for (std::size_t i = 0; i < certs.size(); ++i) {
        require_bound(S, certs[i], "log_convex_combine");
        if (!(alphas[i] >= 0.0))
            throw PreconditionError("log_convex_combine: exponents must be >= 0");
        alpha_sum += alphas[i];
        tol = std::max(tol, certs[i].tol);
    }
    if (std::fabs(alpha_sum - 1.0) > 1e-12)
        throw PreconditionError("log_convex_combine: exponents must sum to 1, got " +
                                std::to_string(alpha_sum));

    // A degenerate exponent tuple selects one factor exactly.
    for (std::size_t i = 0; i < certs.size(); ++i)
        if (alphas[i] == 1.0) return certs[i];

    std::vector<std::span<const double>> columns;
    columns.reserve(certs.size());
    for (const auto& c : certs) columns.push_back(c.f.entries());
    std::vector<double> h(certs[0].f.size());
    kernels::geometric_mean(columns, alphas, h);

    ConeCheck check = in_cone(S, PositiveVector(certs[0].f.space(), std::move(h)), tol);
    if (!accepted(check)) {
        const auto& r = rejection(check);
        throw InternalConsistencyError(
            "log_convex_combine: geometric mean failed re-verification at entry " +
            std::to_string(r.index + 1) + " (violation " + std::to_string(r.violation) + ")");
    }
    return certificate(check);
}

}  // namespace substoch
