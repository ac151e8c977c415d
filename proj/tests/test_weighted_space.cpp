#include "doctest.h"

#include "oracles.hpp"
#include "substoch/random.hpp"
#include "substoch/weighted_space.hpp"

using namespace substoch;

namespace {

PositiveOperator make_op(const std::vector<double>& w,
                         const std::vector<std::vector<double>>& rows) {
    std::vector<double> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return PositiveOperator(make_space(w), std::move(flat));
}

// running example used across the suite
PositiveOperator running_example() { return make_op({1, 1}, {{0.2, 0.1}, {0.3, 0.4}}); }

}  // namespace

TEST_SUITE("weighted_space") {

TEST_CASE("construction enforces invariants") {
    CHECK_THROWS_AS(WeightedSpace({}), PreconditionError);
    CHECK_THROWS_AS(WeightedSpace({1.0, 0.0}), PreconditionError);
    CHECK_THROWS_AS(WeightedSpace({1.0, -2.0}), PreconditionError);

    auto space = make_space({1.0, 2.0});
    CHECK_THROWS_AS(PositiveVector(space, {1.0, -0.5}), PreconditionError);
    CHECK_THROWS_AS(PositiveVector(space, {1.0}), ContractViolation);
    CHECK_THROWS_AS(PositiveOperator(space, {1.0, 2.0, 3.0}), ContractViolation);
    CHECK_THROWS_AS(PositiveOperator(space, {1.0, 2.0, -3.0, 4.0}), PreconditionError);
}

TEST_CASE("apply matches the direct summation oracle") {
    const auto S = running_example();
    const PositiveVector x(S.space(), {1.0, 1.0});
    const auto y = apply(S, x);
    const auto expect = oracles::weighted_matvec({{0.2, 0.1}, {0.3, 0.4}}, {1, 1}, {1, 1});
    CHECK(y[0] == doctest::Approx(expect[0]).epsilon(1e-15));
    CHECK(y[1] == doctest::Approx(expect[1]).epsilon(1e-15));
    CHECK(y[0] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(y[1] == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("apply identity and zero") {
    auto space = make_space({1.0, 1.0});
    const auto I = PositiveOperator::identity(space);
    const PositiveVector x(space, {5.0, 7.0});
    const auto y = apply(I, x);
    CHECK(y[0] == 5.0);
    CHECK(y[1] == 7.0);

    const auto Z = PositiveOperator::zero(space);
    const auto z = apply(Z, x);
    CHECK(z[0] == 0.0);
    CHECK(z[1] == 0.0);
}

TEST_CASE("apply rejects mismatched spaces") {
    const auto S = running_example();
    const PositiveVector x(make_space({1.0, 2.0}), {1.0, 1.0});
    CHECK_THROWS_AS(apply(S, x), ContractViolation);
}

TEST_CASE("column mass") {
    const auto S = running_example();
    const auto mass = column_mass(S);
    CHECK(mass[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mass[1] == doctest::Approx(0.5).epsilon(1e-15));

    const auto Z = PositiveOperator::zero(S.space());
    const auto zmass = column_mass(Z);
    CHECK(zmass[0] == 0.0);
    CHECK(zmass[1] == 0.0);

    // 0.5 * weight 2 = mass 1
    const auto half = make_op({2.0}, {{0.5}});
    CHECK(column_mass(half)[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("column mass matches the oracle on random instances") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = rng.index(1, 12);
        const auto S = random_substochastic(rng, random_space(rng, n));
        const auto mass = column_mass(S);
        const auto rows = oracles::as_rows(S);
        std::vector<double> w(S.space()->weights().begin(), S.space()->weights().end());
        const auto expect = oracles::weighted_column_mass(rows, w);
        for (std::size_t j = 0; j < n; ++j)
            CHECK(mass[j] == doctest::Approx(expect[j]).epsilon(1e-13));
    }
}

TEST_CASE("classification picks the most specific tag") {
    CHECK(classify(running_example(), 1e-12) == StochClass::StrictlySubstochastic);
    CHECK(classify(make_op({1, 1}, {{0.5, 0.5}, {0.5, 0.5}})) == StochClass::Stochastic);
    CHECK(classify(make_op({1, 1}, {{1.0, 0.3}, {0.2, 0.3}})) == StochClass::NotSubstochastic);
    // one column exactly 1, one below: substochastic but neither strict nor stochastic
    CHECK(classify(make_op({1, 1}, {{0.5, 0.2}, {0.5, 0.3}})) ==
          StochClass::SubstochasticNotStochastic);
    CHECK_THROWS_AS(classify(running_example(), -1.0), PreconditionError);
}

TEST_CASE("norms") {
    auto space = make_space({2.0, 1.0});
    const PositiveVector x(space, {1.0, 2.0});
    CHECK(norm(x, NormKind::l1()) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(norm(x, NormKind::linf()) == doctest::Approx(2.0).epsilon(1e-15));
    // (1^2*2 + 2^2*1)^(1/2) = sqrt(6)
    CHECK(norm(x, NormKind::lp(2.0)) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));

    const auto zero = PositiveVector::zeros(space);
    CHECK(norm(zero, NormKind::l1()) == 0.0);
    CHECK(norm(zero, NormKind::linf()) == 0.0);
    CHECK(norm(zero, NormKind::lp(3.0)) == 0.0);

    CHECK_THROWS_AS(NormKind::lp(1.0), PreconditionError);
    CHECK_THROWS_AS(NormKind::lp(0.5), PreconditionError);
}

TEST_CASE("strict positivity is exact") {
    auto space = make_space({1.0, 1.0});
    CHECK(is_strictly_positive(PositiveVector(space, {1.0, 1.0})));
    CHECK_FALSE(is_strictly_positive(PositiveVector(space, {1.0, 0.0})));
    CHECK(is_strictly_positive(PositiveVector(space, {1e-300, 2.0})));
}

TEST_CASE("apply is linear and monotone on random instances") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = rng.index(2, 15);
        const auto space = random_space(rng, n);
        const auto S = random_substochastic(rng, space);
        const auto x = random_nonnegative(rng, space, 0.0, 5.0);
        const auto y = random_nonnegative(rng, space, 0.0, 5.0);
        const double a = rng.uniform(0.0, 3.0);
        const double b = rng.uniform(0.0, 3.0);

        std::vector<double> combo(n);
        for (std::size_t i = 0; i < n; ++i) combo[i] = a * x[i] + b * y[i];
        const auto lhs = apply(S, PositiveVector(space, std::move(combo)));
        const auto sx = apply(S, x);
        const auto sy = apply(S, y);
        for (std::size_t i = 0; i < n; ++i) {
            const double rhs = a * sx[i] + b * sy[i];
            CHECK(std::fabs(lhs[i] - rhs) <= 1e-12 * std::max(1.0, std::fabs(rhs)));
        }

        // monotone: x <= x + y entrywise implies Sx <= S(x+y)
        std::vector<double> bigger(n);
        for (std::size_t i = 0; i < n; ++i) bigger[i] = x[i] + y[i];
        const auto sbig = apply(S, PositiveVector(space, std::move(bigger)));
        for (std::size_t i = 0; i < n; ++i)
            CHECK(sx[i] <= sbig[i] + 1e-12 * std::max(1.0, sbig[i]));
    }
}

TEST_CASE("lattice norm properties on random instances") {
    Rng rng(37);
    const std::vector<NormKind> kinds = {NormKind::l1(), NormKind::linf(), NormKind::lp(2.5)};
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = rng.index(1, 15);
        const auto space = random_space(rng, n);
        const auto x = random_nonnegative(rng, space, 0.0, 5.0);
        const auto extra = random_nonnegative(rng, space, 0.0, 5.0);
        const double a = rng.uniform(0.0, 4.0);

        std::vector<double> scaled(n), dominating(n);
        for (std::size_t i = 0; i < n; ++i) {
            scaled[i] = a * x[i];
            dominating[i] = x[i] + extra[i];
        }
        const PositiveVector ax(space, std::move(scaled));
        const PositiveVector dom(space, std::move(dominating));
        for (NormKind kind : kinds) {
            CHECK(norm(ax, kind) ==
                  doctest::Approx(a * norm(x, kind)).epsilon(1e-12).scale(1.0));
            CHECK(norm(x, kind) <= norm(dom, kind) * (1.0 + 1e-12) + 1e-15);
        }
    }
}

TEST_CASE("stochastic operators preserve weighted mass") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = rng.index(2, 12);
        const auto space = random_space(rng, n);
        // rescale a random matrix to exact unit column masses
        auto S0 = random_substochastic(rng, space);
        std::vector<double> entries(S0.entries().begin(), S0.entries().end());
        const auto mass = column_mass(S0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) entries[i * n + j] /= mass[j];
        const PositiveOperator S(space, std::move(entries));
        REQUIRE(classify(S, 1e-10) == StochClass::Stochastic);

        const auto x = random_nonnegative(rng, space, 0.0, 5.0);
        const double before = norm(x, NormKind::l1());
        const double after = norm(apply(S, x), NormKind::l1());
        CHECK(std::fabs(after - before) <= 1e-10 * std::max(1.0, before));
    }
}

}  // TEST_SUITE
