#include <doctest.h>

#include <random>

#include <qcft/errors.hpp>
#include <qcft/serialize.hpp>
#include <qcft/series.hpp>

using qcft::FracQSeries;
using qcft::Rational;

namespace {

FracQSeries ints(Rational a, std::vector<long> c) { return FracQSeries::from_integers(a, c, c.size()); }

FracQSeries random_series(std::mt19937 &rng, std::size_t order, Rational prefactor = Rational(0))
{
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::vector<long> c(order);
    for (auto &x : c) {
        x = coeff(rng);
    }
    return FracQSeries::from_integers(prefactor, c, order);
}

} // namespace

TEST_CASE("addition cancels and aligns prefactors")
{
    CHECK(ints(0, {1, -1}) + ints(0, {0, 1}) == ints(0, {1, 0}));
    const auto sum = ints(Rational(1, 2), {1, 1}) + ints(Rational(3, 2), {1});
    CHECK(sum.prefactor() == Rational(1, 2));
    CHECK(sum[0] == 1);
    CHECK(sum[1] == 2);
    CHECK_THROWS_AS(ints(Rational(1, 2), {1}) + ints(Rational(1, 3), {1}), qcft::NonAlignablePrefactor);
}

TEST_CASE("multiplication")
{
    constexpr std::size_t n = 12;
    const auto geometric = FracQSeries::from_integers(0, std::vector<long>(n, 1), n);
    const auto one_minus_q = FracQSeries::from_integers(0, {1, -1}, n);
    const auto telescoped = one_minus_q * geometric;
    CHECK(telescoped == FracQSeries::one(n));

    const auto exps = ints(Rational(-1, 60), {1}) * ints(Rational(11, 60), {1});
    CHECK(exps.prefactor() == Rational(1, 6));
    CHECK(exps[0] == 1);

    const auto sq = ints(0, {1, 1, 0}) * ints(0, {1, 1, 0});
    CHECK(sq == ints(0, {1, 2, 1}));
}

TEST_CASE("inversion")
{
    constexpr std::size_t n = 10;
    const auto inv = qcft::invert(FracQSeries::from_integers(0, {1, -1}, n));
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(inv[k] == 1);
    }
    const auto p = qcft::invert(ints(Rational(1, 24), {1}));
    CHECK(p.prefactor() == Rational(-1, 24));
    CHECK(p[0] == 1);
    CHECK_THROWS_AS(qcft::invert(FracQSeries::zero(4)), qcft::NonUnitLeadingCoefficient);
}

TEST_CASE("q derivative follows the power rule")
{
    const auto d1 = qcft::q_derivative(ints(Rational(-1, 60), {1}));
    CHECK(d1.prefactor() == Rational(-1, 60));
    CHECK(d1[0] == Rational(-1, 60));
    CHECK(qcft::q_derivative(FracQSeries::one(5)).is_zero());
    const auto d3 = qcft::q_derivative(ints(Rational(11, 60), {1, 1}));
    CHECK(d3.prefactor() == Rational(11, 60));
    CHECK(d3[0] == Rational(11, 60));
    CHECK(d3[1] == Rational(71, 60));
}

TEST_CASE("substitute_power")
{
    const auto a = qcft::substitute_power(ints(0, {1, -1}), 5);
    CHECK(qcft::coefficient_at(a, 0) == 1);
    CHECK(qcft::coefficient_at(a, 5) == -1);
    for (long e = 1; e < 5; ++e) {
        CHECK(qcft::coefficient_at(a, e) == 0);
    }
    CHECK(qcft::substitute_power(ints(Rational(1, 24), {1}), 2).prefactor() == Rational(1, 12));
    const auto c = qcft::substitute_power(ints(0, {1, 1, 1}), 3);
    CHECK(c.order() == 9);
    CHECK(c[0] == 1);
    CHECK(c[3] == 1);
    CHECK(c[6] == 1);
    CHECK(c[1] == 0);
}

TEST_CASE("coefficient_at")
{
    const auto f = ints(Rational(-1, 60), {1, 2});
    CHECK(qcft::coefficient_at(f, Rational(-1, 60)) == 1);
    CHECK(qcft::coefficient_at(f, Rational(59, 60)) == 2);
    CHECK_THROWS_AS(qcft::coefficient_at(ints(0, {1, 1}), Rational(1, 2)), qcft::ExponentOutOfRange);
    CHECK_THROWS_AS(qcft::coefficient_at(f, Rational(119, 60)), qcft::ExponentOutOfRange);
}

TEST_CASE("ring axioms on random truncations")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 25; ++trial) {
        const auto f = random_series(rng, 9 + trial % 5, Rational(trial % 3, 7));
        const auto g = random_series(rng, 11, Rational(trial % 3, 7) + Rational(trial % 2));
        const auto h = random_series(rng, 10, Rational(-1, 5));
        const auto lhs = (f + g) * h;
        const auto rhs = f * h + g * h;
        CHECK(lhs == rhs);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
    }
}

TEST_CASE("invert is a two-sided inverse")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_series(rng, 15, Rational(trial, 11));
        std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
        c[0] = (trial % 2 == 0) ? 1 : Rational(-3, 2);
        f = FracQSeries(f.prefactor(), c);
        const auto inv = qcft::invert(f);
        const auto left = f * inv;
        const auto right = inv * f;
        CHECK(left.prefactor() == 0);
        for (std::size_t k = 0; k < left.order(); ++k) {
            CHECK(left[k] == (k == 0 ? 1 : 0));
            CHECK(right[k] == left[k]);
        }
    }
}

TEST_CASE("Leibniz rule")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_series(rng, 12, Rational(trial, 13));
        const auto g = random_series(rng, 12, Rational(-trial, 5));
        const auto lhs = qcft::q_derivative(f * g);
        const auto rhs = qcft::q_derivative(f) * g + f * qcft::q_derivative(g);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("serialization is deterministic and round-trips")
{
    std::mt19937 rng(3);
    const auto f = random_series(rng, 20, Rational(-7, 60));
    const auto a = qcft::dump_stable(qcft::to_json(f));
    const auto b = qcft::dump_stable(qcft::to_json(f));
    CHECK(a == b);
    CHECK(qcft::series_from_json(qcft::Json::parse(a)) == f);
    CHECK(qcft::to_json(Rational(0)).get<std::string>() == "0/1");
    CHECK(qcft::to_json(Rational(26)).get<std::string>() == "26/1");
}
