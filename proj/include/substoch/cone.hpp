#ifndef SUBSTOCH_CONE_HPP
#define SUBSTOCH_CONE_HPP

#include <cstdint>
#include <span>
#include <variant>

#include "substoch/weighted_space.hpp"

// The wedge C(S) of a substochastic, not stochastic operator S: strictly
// positive f with Sf <= f.  Membership hands out certificates; a certificate
// is the ticket for the explicit rank-one stochastic completion and for the
// wedge/log-convexity operations.

namespace substoch {

struct ConeCertificate {
    PositiveVector f;
    PositiveVector slack;  // max(f - Sf, 0)
    std::uint64_t operator_digest;
    double tol;
};

struct ConeRejection {
    enum class Reason { NotStrictlyPositive, DominanceViolated };
    Reason reason;
    std::size_t index;  // first offending entry, 0-based
    double violation;   // 0 for a zero entry; (Sf - f)_i for dominance
};

using ConeCheck = std::variant<ConeCertificate, ConeRejection>;

bool accepted(const ConeCheck& c);
const ConeCertificate& certificate(const ConeCheck& c);
const ConeRejection& rejection(const ConeCheck& c);

/// Membership test: f >> 0 and (Sf)_i <= f_i + tol*max(1, f_i) for all i.
/// S must be substochastic but not stochastic (at the same tol).
ConeCheck in_cone(const PositiveOperator& S, const PositiveVector& f, double tol = kDefaultTol);

/// Stochastic majorant A >= S with Af = f, plus the rank-one data that built it:
/// a_ij = s_ij + phi_i psi_j / lambda.
struct Completion {
    PositiveOperator A;
    PositiveVector phi;  // f - Sf
    PositiveVector psi;  // 1 - column_mass(S), clamped at 0
    double lambda;       // sum_j psi_j f_j w_j
};

Completion stochastic_completion(const PositiveOperator& S, const ConeCertificate& cert);

/// f1 + f2 stays in the wedge; the result is re-verified numerically.
ConeCertificate wedge_add(const PositiveOperator& S, const ConeCertificate& c1,
                          const ConeCertificate& c2);

/// a * f for a > 0; slack scales along.
ConeCertificate wedge_scale(const ConeCertificate& cert, double a);

/// Entrywise weighted geometric mean prod_i f_i^alpha_i of cone elements,
/// alphas >= 0 summing to 1.  The result is re-verified; a failure beyond
/// tolerance signals numerical pathology, not a theory failure.
ConeCertificate log_convex_combine(const PositiveOperator& S,
                                   std::span<const ConeCertificate> certs,
                                   std::span<const double> alphas);

}  // namespace substoch

#endif
