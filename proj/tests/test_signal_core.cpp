#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "perdecomp/errors.hpp"
#include "perdecomp/shift_poly.hpp"
#include "perdecomp/signal.hpp"

using namespace perdecomp;

namespace {

std::vector<double> vals(const Signal& s) { return {s.values().begin(), s.values().end()}; }

Signal sawtooth(Rational p, std::size_t n) { return make_signal(Grid(p, n), Sawtooth{}); }

Signal cos_pi(Rational p, std::size_t n) {
    return make_signal(Grid(p, n), Cosine{Rational(1, 2)});
}

}  // namespace

TEST_CASE("make_signal") {
    CHECK(vals(sawtooth(1, 4)) == std::vector<double>{0, 0.25, 0.5, 0.75});
    CHECK(vals(make_signal(Grid(1, 4), Constant{2})) == std::vector<double>{2, 2, 2, 2});

    SUBCASE("cos(2 pi x / 3) on three points matches direct evaluation") {
        Signal f = make_signal(Grid(3, 3), Cosine{Rational(1, 3)});
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(f[j] == doctest::Approx(std::cos(2 * std::numbers::pi * j / 3.0)).epsilon(1e-15));
        }
        CHECK(f[0] == 1.0);
        CHECK(std::abs(f[1] + 0.5) < 1e-15);
        CHECK(std::abs(f[2] + 0.5) < 1e-15);
    }

    CHECK_THROWS_AS(make_signal(Grid(1, 4), SampleList{{1, 2, 3}}), LengthMismatch);
    CHECK_THROWS_AS(make_signal(Grid(1, 4), Constant{NAN}), InvalidParameter);
    CHECK_THROWS_AS(Grid(Rational(-1), 4), InvalidParameter);
    CHECK_THROWS_AS(Grid(Rational(1), 0), InvalidParameter);
}

TEST_CASE("shift_signal rotates by whole samples") {
    Signal f = sawtooth(1, 4);
    CHECK(vals(shift_signal(f, Rational(1, 2))) == std::vector<double>{0.5, 0.75, 0, 0.25});
    CHECK(vals(shift_signal(f, Rational(1))) == vals(f));
    CHECK(vals(shift_signal(f, Rational(-1, 4))) == std::vector<double>{0.75, 0, 0.25, 0.5});
    CHECK_THROWS_AS(shift_signal(f, Rational(1, 3)), IncommensurateShift);
}

TEST_CASE("apply_operator") {
    SUBCASE("forward difference kills constants") {
        Signal c = make_signal(Grid(5, 10), Constant{3.5});
        CHECK(sup_norm(apply_operator(ShiftPoly::forward_difference(), c)) == 0.0);
    }
    SUBCASE("I + E + E^2 annihilates cos(2 pi x / 3)") {
        Signal f = make_signal(Grid(3, 3), Cosine{Rational(1, 3)});
        CHECK(sup_norm(apply_operator(ShiftPoly::from_powers({1, 1, 1}), f)) < 1e-15);
    }
    SUBCASE("I + E^3 on a sawtooth sampled on p = 6, N = 12") {
        Signal f = sawtooth(6, 12);
        auto rotated = oracle::rotate(f, 6);  // 3 / step = 6 samples
        Signal got = apply_operator(ShiftPoly::identity() + ShiftPoly::shift(3), f);
        for (std::size_t j = 0; j < 12; ++j) CHECK(got[j] == f[j] + rotated[j]);
    }
    CHECK_THROWS_AS(apply_operator(ShiftPoly::shift(Rational(1, 3)), sawtooth(1, 4)),
                    IncommensurateShift);
}

TEST_CASE("periodicity predicates") {
    CHECK(is_periodic_with(sawtooth(1, 8), 1));
    CHECK_FALSE(is_periodic_with(make_signal(Grid(3, 3), Cosine{Rational(1, 3)}), 1));
    CHECK(is_periodic_with(make_signal(Grid(6, 12), Constant{4}), Rational(1, 2)));

    CHECK(is_antiperiodic_with(cos_pi(2, 8), 1));
    CHECK_FALSE(is_antiperiodic_with(sawtooth(1, 8), Rational(1, 2)));
    Signal zero = Signal::zeros(Grid(6, 12));
    for (Rational q : {Rational(1, 2), Rational(1), Rational(3)}) {
        CHECK(is_periodic_with(zero, q));
        CHECK(is_antiperiodic_with(zero, q));
    }
    CHECK_THROWS_AS(is_periodic_with(sawtooth(1, 4), Rational(1, 3)), IncommensurateShift);
    CHECK_THROWS_AS(is_periodic_with(sawtooth(1, 4), Rational(0)), InvalidParameter);
}

TEST_CASE("dilate relabels the grid") {
    Signal f = cos_pi(2, 8);
    Signal g = dilate(f, 2);
    CHECK(g.grid().period() == Rational(1));
    CHECK(is_antiperiodic_with(g, Rational(1, 2), 1e-12));
    Signal expected = oracle::evaluate(g.grid(), [](const Rational& x) {
        return std::cos(2 * std::numbers::pi * x.to_double());
    });
    CHECK(oracle::max_diff(g.values(), expected.values()) < 1e-12);

    CHECK(vals(dilate(f, 1)) == vals(f));
    CHECK(dilate(f, 1).grid() == f.grid());
    CHECK(dilate(sawtooth(1, 4), Rational(1, 2)).grid().period() == Rational(2));
    CHECK_THROWS_AS(dilate(f, Rational(0)), InvalidParameter);
}

TEST_CASE("map_pointwise and parity tags") {
    CHECK(parity(PointwiseMap::abs) == Parity::even);
    CHECK(parity(PointwiseMap::square) == Parity::even);
    CHECK(parity(PointwiseMap::identity) == Parity::odd);
    CHECK(parity(PointwiseMap::cube) == Parity::odd);
    CHECK(parity(PointwiseMap::negate) == Parity::odd);
    CHECK(parity(PointwiseMap::exp) == Parity::neither);

    Signal f = cos_pi(2, 16);
    CHECK(is_antiperiodic_with(map_pointwise(PointwiseMap::cube, f), 1, 1e-12));
    CHECK(is_periodic_with(map_pointwise(PointwiseMap::abs, f), 1, 1e-12));
    CHECK(vals(map_pointwise(PointwiseMap::identity, f)) == vals(f));
}

TEST_CASE("tag parity agrees with the map on sample values") {
    std::mt19937_64 rng(3);
    auto xs = oracle::uniform(rng, 100, -3, 3);
    for (auto m : {PointwiseMap::identity, PointwiseMap::abs, PointwiseMap::square,
                   PointwiseMap::cube, PointwiseMap::exp, PointwiseMap::negate}) {
        bool even = true, odd = true;
        for (double x : xs) {
            even = even && apply_map(m, -x) == apply_map(m, x);
            odd = odd && apply_map(m, -x) == -apply_map(m, x);
        }
        Parity expected = even ? Parity::even : odd ? Parity::odd : Parity::neither;
        CHECK(parity(m) == expected);
    }
}

TEST_CASE("norms and combine") {
    CHECK(sup_norm(make_signal(Grid(1, 3), Constant{-3})) == 3.0);
    for (std::size_t n : {2u, 8u, 64u}) {
        CHECK(mean(sawtooth(1, n)) ==
              doctest::Approx(static_cast<double>(n - 1) / (2.0 * n)).epsilon(1e-15));
    }
    Signal f = cos_pi(2, 8);
    CHECK(sup_norm(combine(1, f, -1, f)) == 0.0);
    CHECK_THROWS_AS(combine(1, f, 1, cos_pi(2, 4)), GridMismatch);
    CHECK_THROWS_AS(combine(1, f, 1, Signal::zeros(Grid(4, 8))), GridMismatch);
}

TEST_CASE("shift polynomial algebra") {
    const ShiftPoly I = ShiftPoly::identity();
    const ShiftPoly E = ShiftPoly::shift(1);
    CHECK(ShiftPoly::forward_difference() == E - I);
    CHECK(ShiftPoly::backward_difference() == I - ShiftPoly::shift(-1));
    CHECK((E - E).is_zero());
    CHECK((I + E) * (I - E) == I - ShiftPoly::shift(2));
    CHECK((2.0 * I + ShiftPoly::shift(2)).str() == "2I + E^2");
    CHECK((ShiftPoly::shift(Rational(-1, 2), -1.0) + I).str() == "-E^(-1/2) + I");
    CHECK(ShiftPoly::from_powers({1, 0, 1}).terms().size() == 2);
    CHECK(ShiftPoly().str() == "0");
}

TEST_CASE("property: shift composition, linearity, products") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick_n(1, 48);
    std::uniform_int_distribution<int> pick_k(-100, 100);
    std::uniform_real_distribution<double> coef(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(pick_n(rng));
        const Rational period(pick_n(rng), pick_n(rng));
        Grid grid(period, n);
        const Rational step = grid.step();
        Signal f = oracle::random_signal(grid, rng);
        Signal g = oracle::random_signal(grid, rng);
        const Rational a = step * Rational(pick_k(rng));
        const Rational b = step * Rational(pick_k(rng));

        CHECK(oracle::max_diff(shift_signal(shift_signal(f, a), b).values(),
                               shift_signal(f, a + b).values()) == 0.0);

        ShiftPoly op1, op2;
        for (int t = 0; t < 3; ++t) {
            op1 = op1 + ShiftPoly::shift(step * Rational(pick_k(rng)), coef(rng));
            op2 = op2 + ShiftPoly::shift(step * Rational(pick_k(rng)), coef(rng));
        }
        const double x = coef(rng), y = coef(rng);
        Signal lhs = apply_operator(op1, combine(x, f, y, g));
        Signal rhs = combine(x, apply_operator(op1, f), y, apply_operator(op1, g));
        CHECK(max_abs_diff(lhs, rhs) < 1e-12);

        CHECK(max_abs_diff(apply_operator(op1 * op2, f),
                           apply_operator(op1, apply_operator(op2, f))) < 1e-12);
    }
}

TEST_CASE("property: E^n = E^(n mod p) on integer-period grids") {
    std::mt19937_64 rng(5);
    for (std::int64_t p = 1; p <= 9; ++p) {
        Grid grid(p, static_cast<std::size_t>(p * 3));
        Signal f = oracle::random_signal(grid, rng);
        for (std::int64_t n = -20; n <= 20; ++n) {
            const std::int64_t r = ((n % p) + p) % p;
            CHECK(vals(apply_operator(ShiftPoly::shift(n), f)) ==
                  vals(apply_operator(ShiftPoly::shift(r), f)));
        }
    }
}

TEST_CASE("property: composition with even and odd maps") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t q = 1 + trial % 5;
        Grid grid(2 * q, static_cast<std::size_t>(2 * q * 4));
        Signal ap = oracle::random_antiperiodic(grid, q, rng);
        Signal per = oracle::random_periodic(grid, q, rng);
        REQUIRE(is_antiperiodic_with(ap, q, 1e-12));
        for (auto m : {PointwiseMap::identity, PointwiseMap::abs, PointwiseMap::square,
                       PointwiseMap::cube, PointwiseMap::exp, PointwiseMap::negate}) {
            Signal mapped = map_pointwise(m, ap);
            if (parity(m) == Parity::odd) CHECK(is_antiperiodic_with(mapped, q, 1e-12));
            if (parity(m) == Parity::even) CHECK(is_periodic_with(mapped, q, 1e-12));
            CHECK(is_periodic_with(map_pointwise(m, per), q, 1e-12));
        }
    }
}

TEST_CASE("property: dilation preserves (anti)periodicity with rescaled period") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> small(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t q = small(rng);
        Grid grid(2 * q, static_cast<std::size_t>(4 * q));
        Signal f = oracle::random_antiperiodic(grid, q, rng);
        Signal h = oracle::random_signal(grid, rng);
        const Rational omega(small(rng), small(rng));
        CHECK(is_antiperiodic_with(f, q, 1e-12) ==
              is_antiperiodic_with(dilate(f, omega), Rational(q) / omega, 1e-12));
        CHECK(is_antiperiodic_with(h, q, 1e-12) ==
              is_antiperiodic_with(dilate(h, omega), Rational(q) / omega, 1e-12));
    }
}
