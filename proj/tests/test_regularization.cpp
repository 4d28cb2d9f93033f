#include <doctest.h>

#include <qcft/errors.hpp>
#include <qcft/regularization.hpp>
#include <qcft/special_series.hpp>

#include "oracles.hpp"

using qcft::ArithmeticProgressionSet;
using qcft::FracQSeries;
using qcft::Rational;

namespace {

ArithmeticProgressionSet set(const char *text) { return ArithmeticProgressionSet::parse(text); }

} // namespace

TEST_CASE("Hurwitz values")
{
    CHECK(qcft::hurwitz_sum(1, 1).value == Rational(-1, 12));
    CHECK(qcft::hurwitz_sum(5, 1).value + qcft::hurwitz_sum(5, 4).value == Rational(-1, 30));
    CHECK(qcft::hurwitz_sum(5, 2).value + qcft::hurwitz_sum(5, 3).value == Rational(11, 30));
    CHECK(qcft::hurwitz_sum(5, 1).method == qcft::RegularizationMethod::Hurwitz);
}

TEST_CASE("Ramanujan's naive values and their defect")
{
    struct Row {
        long p, r;
        Rational naive, defect;
    };
    for (const auto &row : {Row{1, 1, Rational(5, 12), Rational(-1, 2)}, Row{5, 1, Rational(1, 12), Rational(-1, 10)},
                            Row{2, 2, Rational(5, 6), Rational(-1)}}) {
        const auto naive = qcft::ramanujan_naive_sum(row.p, row.r).value;
        CHECK(naive == row.naive);
        CHECK(qcft::hurwitz_sum(row.p, row.r).value - naive == row.defect);
    }
    for (long p = 1; p <= 12; ++p) {
        for (long r = 1; r <= p; ++r) {
            CHECK(qcft::hurwitz_sum(p, r).value - qcft::ramanujan_naive_sum(p, r).value == Rational(-r * r, 2 * p));
            if (r < p) {
                CHECK(qcft::hurwitz_sum(p, r).value == qcft::hurwitz_sum(p, p - r).value);
            }
        }
    }
}

TEST_CASE("Casimir exponents")
{
    CHECK(qcft::casimir_exponent(set("5:1,4")) == Rational(-1, 60));
    CHECK(qcft::casimir_exponent(set("5:2,3")) == Rational(11, 60));
    CHECK(qcft::casimir_exponent(set("1:1")) == Rational(-1, 24));
}

TEST_CASE("progression sets reject overlaps and bad input")
{
    CHECK_THROWS_AS(set("2:1;3:1"), qcft::InvalidProgression);
    CHECK_THROWS_AS(set("5:0"), qcft::InvalidProgression);
    CHECK_THROWS_AS(set("5:6"), qcft::InvalidProgression);
    CHECK_THROWS_AS(set("5:1,1"), qcft::InvalidProgression);
    CHECK_THROWS(set("five:1"));
    CHECK_NOTHROW(set("2:1;4:2"));
    CHECK(set("5:1,4").members_below(12) == std::vector<long>{1, 4, 6, 9, 11});
}

TEST_CASE("oscillator series match the products")
{
    const std::size_t n = qcft::default_order;
    const auto free = qcft::oscillator_partition_series(set("1:1"), n);
    CHECK(free == qcft::invert(qcft::dedekind_eta(n)));
    CHECK(free * qcft::dedekind_eta(n) == FracQSeries::one(n));

    const auto g = qcft::oscillator_partition_series(set("5:1,4"), n);
    CHECK(g.prefactor() == Rational(-1, 60));
    CHECK(g == FracQSeries::one(n, Rational(-1, 60)) * qcft::rr_product(qcft::RRProduct::G, n));
    const auto h = qcft::oscillator_partition_series(set("5:2,3"), n);
    CHECK(h.prefactor() == Rational(11, 60));
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(h[k] == qcft::rr_product(qcft::RRProduct::H, n)[k]);
        CHECK(g[k].is_integer());
        CHECK(g[k].sign() >= 0);
    }
}

TEST_CASE("twisted oscillator series")
{
    constexpr std::size_t n = 40;
    const auto twisted = qcft::twisted_oscillator_series(set("1:1"), n);
    CHECK(twisted.prefactor() == qcft::oscillator_partition_series(set("1:1"), n).prefactor());
    // Frozen from the brute-force expansion of prod (1 + q^n)^{-1}.
    const std::vector<long> frozen{1, -1, 0, -1, 1, -1, 1, -1, 2, -2, 2, -2};
    auto brute = oracle::Poly(n, 0);
    brute[0] = 1;
    for (std::size_t e = 1; e < n; ++e) {
        std::vector<std::int64_t> inv(n, 0);
        std::int64_t sign = 1;
        for (std::size_t k = 0; k < n; k += e, sign = -sign) {
            inv[k] = sign;
        }
        brute = oracle::multiply(brute, inv, n);
    }
    for (std::size_t k = 0; k < frozen.size(); ++k) {
        CHECK(brute[k] == frozen[k]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(twisted[k] == Rational(brute[k]));
    }
}

TEST_CASE("critical dimension")
{
    const auto d = qcft::critical_dimension();
    CHECK(d.spacetime == 26);
    CHECK(d.transverse == 24);
    CHECK(d.vacuum_energy == -1);
}
