#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "perdecomp/errors.hpp"
#include "perdecomp/halving.hpp"

using namespace perdecomp;

namespace {

Signal sawtooth(Rational p, std::size_t n) { return make_signal(Grid(p, n), Sawtooth{}); }

Signal centered_sawtooth(std::size_t n) {
    Grid grid(1, n);
    return combine(1.0, sawtooth(1, n), -0.5, make_signal(grid, Constant{1.0}));
}

std::vector<double> vals(const Signal& s) { return {s.values().begin(), s.values().end()}; }

}  // namespace

TEST_CASE("split_half on the sampled sawtooth") {
    auto [f, g] = split_half(sawtooth(1, 8));
    CHECK(vals(f) == std::vector<double>{.25, .375, .5, .625, .25, .375, .5, .625});
    CHECK(vals(g) == std::vector<double>{-.25, -.25, -.25, -.25, .25, .25, .25, .25});

    Grid grid(1, 8);
    CHECK(vals(f) == vals(oracle::evaluate(grid, oracle::sawtooth_f1)));
    CHECK(vals(g) == vals(oracle::evaluate(grid, oracle::sawtooth_ft1)));
}

TEST_CASE("split_half of trivial inputs") {
    Signal c = make_signal(Grid(2, 6), Constant{1.5});
    auto [f, g] = split_half(c);
    CHECK(vals(f) == vals(c));
    CHECK(sup_norm(g) == 0.0);

    Signal cos_pi = make_signal(Grid(2, 8), Cosine{Rational(1, 2)});
    auto [f2, g2] = split_half(cos_pi);
    CHECK(sup_norm(f2) < 1e-15);
    CHECK(max_abs_diff(g2, cos_pi) < 1e-15);

    CHECK_THROWS_AS(split_half(sawtooth(1, 7)), OddSampleCount);
}

TEST_CASE("generations") {
    Signal saw = sawtooth(1, 8);
    CHECK(periodic_generation(saw, 1)[2] == 0.5);  // x = 0.25
    CHECK(antiperiodic_generation(saw, 1)[0] == -0.25);
    CHECK(vals(periodic_generation(saw, 0)) == vals(saw));

    Signal g = make_signal(Grid(2, 8), Cosine{Rational(1, 2)});
    CHECK(sup_norm(periodic_generation(g, 1)) < 1e-15);
    CHECK(max_abs_diff(antiperiodic_generation(g, 1), g) < 1e-15);

    Signal c = make_signal(Grid(1, 16), Constant{2});
    for (int n = 1; n <= 4; ++n) CHECK(sup_norm(antiperiodic_generation(c, n)) == 0.0);

    CHECK_THROWS_AS(periodic_generation(sawtooth(1, 12), 3), GridNotDivisible);
    CHECK_THROWS_AS(antiperiodic_generation(sawtooth(1, 6), 2), GridNotDivisible);
    CHECK_THROWS_AS(antiperiodic_generation(saw, 0), InvalidParameter);
    CHECK_THROWS_AS(periodic_generation(saw, -1), InvalidParameter);
}

TEST_CASE("generation operators") {
    CHECK(periodic_generation_operator(1, 0) == ShiftPoly::identity());
    const ShiftPoly op1 = periodic_generation_operator(1, 1);
    CHECK(op1 == 0.5 * (ShiftPoly::identity() + ShiftPoly::shift(Rational(1, 2))));
    const ShiftPoly ap2 = antiperiodic_generation_operator(1, 2);
    CHECK(ap2.coefficient(Rational(0)) == 0.25);
    CHECK(ap2.coefficient(Rational(1, 4)) == -0.25);
    CHECK(ap2.coefficient(Rational(1, 2)) == 0.25);
    CHECK(ap2.coefficient(Rational(3, 4)) == -0.25);
}

TEST_CASE("generation_table") {
    SUBCASE("sawtooth recombines") {
        auto table = generation_table(sawtooth(1, 8), 2);
        CHECK(table.depth() == 2);
        CHECK(max_abs_diff(table.reconstruct(), table.source()) < 1e-12);
        CHECK(table.product_deviation() < 1e-12);
    }
    SUBCASE("zero stays zero") {
        auto table = generation_table(Signal::zeros(Grid(1, 8)), 3);
        for (int k = 0; k <= 3; ++k) CHECK(sup_norm(table.periodic(k)) == 0.0);
        for (int k = 1; k <= 3; ++k) CHECK(sup_norm(table.antiperiodic(k)) == 0.0);
    }
    SUBCASE("an antiperiodic input is its own first generation") {
        Signal f = make_signal(Grid(2, 8), Cosine{Rational(1, 2)});
        auto table = generation_table(f, 2);
        CHECK(max_abs_diff(table.antiperiodic(1), f) < 1e-15);
        CHECK(sup_norm(table.antiperiodic(2)) < 1e-15);
        CHECK(sup_norm(table.periodic(2)) < 1e-15);
    }
    auto table = generation_table(sawtooth(1, 8), 1);
    CHECK_THROWS_AS(table.antiperiodic(0), InvalidParameter);
    CHECK_THROWS_AS(table.periodic(2), InvalidParameter);
    CHECK_THROWS_AS(generation_table(sawtooth(1, 8), 4), GridNotDivisible);
}

TEST_CASE("antiperiodic_series") {
    SUBCASE("centered sawtooth converges at level 6") {
        auto report = antiperiodic_series(centered_sawtooth(64), 1e-2, 6);
        CHECK(report.converged);
        CHECK(report.levels_used == 6);
        REQUIRE(report.residual_norms.size() == 7);
        for (int n = 0; n <= 6; ++n) {
            CHECK(report.residual_norms[static_cast<std::size_t>(n)] <=
                  std::ldexp(1.0, -(n + 1)) + 1e-12);
        }
    }
    SUBCASE("raw sawtooth keeps its mean") {
        auto report = antiperiodic_series(sawtooth(1, 64), 1e-2, 6);
        CHECK_FALSE(report.converged);
        CHECK(report.levels_used == 6);
        Signal f6 = periodic_generation(sawtooth(1, 64), 6);
        CHECK(mean(f6) == doctest::Approx(63.0 / 128.0).epsilon(1e-14));
        CHECK(report.residual_norms.back() == doctest::Approx(sup_norm(f6)));
    }
    SUBCASE("zero converges at level 0") {
        auto report = antiperiodic_series(Signal::zeros(Grid(1, 8)), 1e-9, 3);
        CHECK(report.converged);
        CHECK(report.levels_used == 0);
        CHECK(report.partial_terms.empty());
    }
    CHECK_THROWS_AS(antiperiodic_series(sawtooth(1, 12), 1e-3, 3), GridNotDivisible);
}

TEST_CASE("property: split contract, uniqueness and idempotence") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> half(1, 64);
    std::uniform_int_distribution<int> pden(1, 7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 * static_cast<std::size_t>(half(rng));
        Grid grid(Rational(half(rng), pden(rng)), n);
        const Rational q = grid.period() / Rational(2);
        Signal h = oracle::random_signal(grid, rng);
        auto [f, g] = split_half(h);
        CHECK(max_abs_diff(combine(1, f, 1, g), h) < 1e-12);
        CHECK(is_periodic_with(f, q, 1e-12));
        CHECK(is_antiperiodic_with(g, q, 1e-12));

        // Any other split differs by something both q-periodic and q-antiperiodic.
        Signal per = oracle::random_periodic_rational(grid, q, rng);
        Signal anti = oracle::random_antiperiodic_rational(grid, q, rng);
        auto [pf, pg] = split_half(combine(1, per, 1, anti));
        CHECK(max_abs_diff(pf, per) < 1e-12);
        CHECK(max_abs_diff(pg, anti) < 1e-12);

        auto [ff, fg] = split_half(f);
        CHECK(max_abs_diff(ff, f) < 1e-12);
        CHECK(sup_norm(fg) < 1e-12);
        auto [gf, gg] = split_half(g);
        CHECK(sup_norm(gf) < 1e-12);
        CHECK(max_abs_diff(gg, g) < 1e-12);
    }
}

TEST_CASE("property: telescoping, mean conservation, product equivalence") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        Grid grid(Rational(1 + trial % 5, 1 + trial % 3), 64);
        Signal f = oracle::random_signal(grid, rng);
        auto table = generation_table(f, 6);
        CHECK(table.product_deviation() < 1e-12);
        CHECK(max_abs_diff(table.reconstruct(), f) < 1e-12);
        for (int n = 1; n <= 6; ++n) {
            Signal lhs = periodic_generation(f, n - 1);
            Signal rhs = combine(1, periodic_generation(f, n), 1, antiperiodic_generation(f, n));
            CHECK(max_abs_diff(lhs, rhs) < 1e-12);
            CHECK(std::abs(mean(periodic_generation(f, n)) - mean(f)) < 1e-12);
            const Rational q = grid.period() / Rational(std::int64_t{1} << n);
            CHECK(is_periodic_with(table.periodic(n), q, 1e-12));
            CHECK(is_antiperiodic_with(table.antiperiodic(n), q, 1e-12));
        }
    }
}

TEST_CASE("property: series partial sums miss the source by exactly the remainder") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        Grid grid(1, 128);
        Signal f = oracle::random_signal(grid, rng);
        auto report = antiperiodic_series(f, 0.0, 7);
        for (int n = 1; n <= report.levels_used; ++n) {
            Signal err = combine(1, f, -1, report.partial_sum(n, grid));
            CHECK(std::abs(sup_norm(err) -
                           report.residual_norms[static_cast<std::size_t>(n)]) < 1e-12);
        }
    }
}
