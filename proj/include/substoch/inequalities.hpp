#ifndef SUBSTOCH_INEQUALITIES_HPP
#define SUBSTOCH_INEQUALITIES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "substoch/cone.hpp"
#include "substoch/weighted_space.hpp"

// Evaluators and randomized certifiers for the operator inequalities:
// the sharpened Young inequality, geometric-mean bounds under lattice
// seminorms, their kernel-operator versions, sum-splitting bounds, and the
// norm chains satisfied on the wedge C(S).
//
// Every *_check returns a one-sided excess normalized by max(1, rhs); the
// inequalities hold in exact arithmetic, so anything beyond rounding noise
// indicates an implementation or conditioning bug.

namespace substoch {

/// alpha*t^(1/alpha)*x + (1-alpha)*t^(-1/(1-alpha))*y; >= x^alpha*y^(1-alpha)
/// for every t > 0, with equality at the minimizer.
double young_eval(double x, double y, double alpha, double t);

struct YoungMin {
    double t_star;  // (y/x)^(alpha*(1-alpha))
    double value;   // x^alpha * y^(1-alpha)
};

/// Closed-form minimizer; throws InfimumNotAttained when x or y is 0
/// (the infimum is 0 and no t attains it).
YoungMin young_argmin(double x, double y, double alpha);

/// || prod f_i^a_i || vs prod ||f_i||^a_i, alphas > 0 summing to 1.
double holder_seminorm_check(std::span<const PositiveVector> fs, std::span<const double> alphas,
                             NormKind kind);

/// Entrywise S(prod f_i^a_i) vs prod (S f_i)^a_i.
double kernel_holder_check(const PositiveOperator& S, std::span<const PositiveVector> fs,
                           std::span<const double> alphas);

struct ChainViolations {
    double first;
    double second;
    double worst() const { return first > second ? first : second; }
};

/// ||S(prod f_i^a_i)|| <= ||prod (S f_i)^a_i|| <= prod ||S f_i||^a_i.
ChainViolations kernel_seminorm_chain_check(const PositiveOperator& S,
                                            std::span<const PositiveVector> fs,
                                            std::span<const double> alphas, NormKind kind);

/// Entrywise sum_i f_i^a g_i^(1-a) vs (sum f)^a (sum g)^(1-a), a in (0,1).
double sum_split_check(std::span<const PositiveVector> fs, std::span<const PositiveVector> gs,
                       double alpha);

/// ||S(sum_i f_i^a g_i^(1-a))|| <= ||S((sum f)^a (sum g)^(1-a))||
///                              <= ||S(sum f)||^a ||S(sum g)||^(1-a).
ChainViolations sum_split_seminorm_check(const PositiveOperator& S,
                                         std::span<const PositiveVector> fs,
                                         std::span<const PositiveVector> gs, double alpha,
                                         NormKind kind);

/// On the wedge: ||S(prod f_i^a_i)|| <= ||prod f_i^a_i|| <= prod ||f_i||^a_i,
/// alphas >= 0 summing to 1.
ChainViolations cone_norm_bound_check(const PositiveOperator& S,
                                      std::span<const ConeCertificate> certs,
                                      std::span<const double> alphas, NormKind kind);

/// On the wedge: ||S(sum_i f_i^a g_i^(1-a))|| <= ||(sum f)^a (sum g)^(1-a)||
///                                            <= ||sum f||^a ||sum g||^(1-a).
ChainViolations cone_mixed_bound_check(const PositiveOperator& S,
                                       std::span<const ConeCertificate> f_certs,
                                       std::span<const ConeCertificate> g_certs, double alpha,
                                       NormKind kind);

struct TrialConfig {
    std::size_t n_min = 2;
    std::size_t n_max = 20;
    std::size_t m_min = 1;
    std::size_t m_max = 4;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    std::vector<NormKind> norm_kinds = {NormKind::l1(), NormKind::linf(), NormKind::lp(2.0)};
};

struct PropertyReport {
    std::string property_name;
    std::size_t trials_run = 0;
    std::size_t failures = 0;
    double worst_violation = 0.0;
    std::uint64_t worst_seed = 0;
    bool pass = true;
};

/// One report per inequality property.  Deterministic in config: trial k uses
/// sub-seed (seed XOR k), and the aggregation is schedule-independent, so
/// trials may run concurrently.
std::vector<PropertyReport> run_property_suite(const TrialConfig& config);

/// "PASS|FAIL <name> trials=<k> worst=<v> seed=<s>"
std::string format_report(const PropertyReport& report);

}  // namespace substoch

#endif
