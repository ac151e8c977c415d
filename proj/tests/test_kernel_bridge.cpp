#include "doctest.h"

#include <cmath>

#include "substoch/inequalities.hpp"
#include "substoch/kernel_bridge.hpp"
#include "substoch/random.hpp"
#include "substoch/transforms.hpp"

using namespace substoch;

TEST_SUITE("kernel_bridge") {

TEST_CASE("constant kernel discretizes exactly") {
    const auto spec = KernelSpec::named("const:0.5", 4);
    const auto disc = discretize(spec);
    CHECK(disc.space->size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(disc.space->weight(i) == 0.25);
        CHECK(disc.nodes[i] == doctest::Approx((i + 0.5) / 4.0).epsilon(1e-16));
        for (std::size_t j = 0; j < 4; ++j) CHECK(disc.op.at(i, j) == 0.5);
    }
    const auto mass = column_mass(disc.op);
    for (std::size_t j = 0; j < 4; ++j) CHECK(mass[j] == 0.5);  // exact, n a power of two
    CHECK(classify(disc.op) == StochClass::StrictlySubstochastic);

    const auto ones = KernelSpec::named("const:1", 8);
    CHECK(classify(discretize(ones).op) == StochClass::Stochastic);
}

TEST_CASE("sum kernel at n = 2 reproduces the hand quadrature") {
    const auto disc = discretize(KernelSpec::named("sum", 2));
    // nodes 1/4 and 3/4; masses 1/2 + y_j
    const auto mass = column_mass(disc.op);
    CHECK(mass[0] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(mass[1] == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(classify(disc.op) == StochClass::NotSubstochastic);
}

TEST_CASE("kernel validation") {
    KernelSpec bad;
    bad.name = "negative";
    bad.k = [](double x, double y) { return x - y; };  // negative below the diagonal
    bad.grid_n = 4;
    CHECK_THROWS_AS(discretize(bad), PreconditionError);
    CHECK_THROWS_AS(KernelSpec::named("const:-1", 4), PreconditionError);
    CHECK_THROWS_AS(KernelSpec::named("rbf", 4), PreconditionError);
}

TEST_CASE("completion demo matches the continuous construction") {
    for (std::size_t n : {1u, 4u, 64u}) {
        const auto comp = completion_demo(KernelSpec::named("const:0.5", n));
        CHECK(std::fabs(comp.lambda - 0.5) <= 1e-12);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::fabs(comp.phi[i] - 0.5) <= 1e-12);
            CHECK(std::fabs(comp.psi[i] - 0.5) <= 1e-12);
            for (std::size_t j = 0; j < n; ++j) CHECK(std::fabs(comp.A.at(i, j) - 1.0) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(completion_demo(KernelSpec::named("const:1", 4)), StochasticOperatorError);
    CHECK_THROWS_AS(completion_demo(KernelSpec::named("sum", 4)), PreconditionError);
}

TEST_CASE("refinement study: constant and product kernels are exact, quadratic is O(n^-2)") {
    const std::vector<std::size_t> grids = {2, 4, 8, 16, 32};

    const auto const_rows = refinement_study(KernelSpec::named("const:0.5", 4), grids);
    for (const auto& row : const_rows) CHECK(row.column_mass_error == 0.0);

    // midpoint is exact on integrands linear in x
    const auto prod_rows = refinement_study(KernelSpec::named("product", 4), grids);
    for (const auto& row : prod_rows) CHECK(row.column_mass_error <= 1e-15);

    const auto quad_rows = refinement_study(KernelSpec::named("quadratic", 4), grids);
    for (std::size_t idx = 0; idx + 1 < quad_rows.size(); ++idx) {
        if (quad_rows[idx].n < 8) continue;
        const double ratio = quad_rows[idx].column_mass_error / quad_rows[idx + 1].column_mass_error;
        CHECK(ratio >= 3.5);
        CHECK(ratio <= 4.5);
    }
    // inequality spot checks stay at rounding level throughout
    for (const auto& row : quad_rows) CHECK(row.worst_violation <= 1e-12);
}

TEST_CASE("discretized operators feed the cone and transform machinery unchanged") {
    const auto disc = discretize(KernelSpec::named("quadratic", 16));
    REQUIRE(classify(disc.op) == StochClass::StrictlySubstochastic);

    Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t m = rng.index(1, 3);
        std::vector<ConeCertificate> certs;
        for (std::size_t i = 0; i < m; ++i) {
            const auto f = random_cone_element(rng, disc.op);
            const auto check = in_cone(disc.op, f, 1e-12);
            REQUIRE(accepted(check));
            certs.push_back(certificate(check));
        }
        const auto alphas = random_simplex(rng, m, 1e-3);
        for (NormKind kind : {NormKind::l1(), NormKind::linf(), NormKind::lp(2.0)}) {
            CHECK(cone_norm_bound_check(disc.op, certs, alphas, kind).worst() <= 1e-9);
            CHECK(cone_mixed_bound_check(disc.op, certs, certs, 0.5, kind).worst() <= 1e-9);
        }
        const auto combined = log_convex_combine(disc.op, certs, alphas);
        const auto comp = stochastic_completion(disc.op, combined);
        const auto mass = column_mass(comp.A);
        for (std::size_t j = 0; j < mass.size(); ++j) CHECK(std::fabs(mass[j] - 1.0) <= 1e-10);

        const auto ef = exp_apply(disc.op, combined.f);
        CHECK(accepted(in_cone(disc.op, ef, 1e-9)));
        const auto rf = resolvent_apply(disc.op, 1.0, combined.f);
        CHECK(accepted(in_cone(disc.op, rf, 1e-9)));
    }
}

}  // TEST_SUITE
