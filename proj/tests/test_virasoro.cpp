#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include <qcft/errors.hpp>
#include <qcft/special_series.hpp>
#include <qcft/virasoro.hpp>

#include "oracles.hpp"

using qcft::FracQSeries;
using qcft::Poly2;
using qcft::Rational;

namespace {

const Poly2 C = Poly2::c();
const Poly2 H = Poly2::h();

// Element of the Virasoro algebra: sum a_m L_m + z * c.
struct Element {
    std::map<long, Rational> modes;
    Rational central;
};

Element lie(const Element &x, const Element &y)
{
    Element out;
    for (const auto &[m, a] : x.modes) {
        for (const auto &[n, b] : y.modes) {
            const auto br = qcft::bracket(m, n);
            if (br.linear != 0) {
                out.modes[m + n] += a * b * Rational(br.linear);
            }
            out.central += a * b * br.central;
        }
    }
    return out;
}

Element operator+(Element a, const Element &b)
{
    for (const auto &[m, v] : b.modes) {
        a.modes[m] += v;
    }
    a.central += b.central;
    return a;
}

bool is_zero(const Element &e)
{
    return e.central.is_zero() && std::all_of(e.modes.begin(), e.modes.end(), [](const auto &kv) {
               return kv.second.is_zero();
           });
}

Element mode(long m) { return Element{{{m, Rational(1)}}, Rational(0)}; }

} // namespace

TEST_CASE("bracket examples")
{
    auto b = qcft::bracket(-2, 2);
    CHECK(b.linear == 4);
    CHECK(b.central == Rational(1, 2));
    b = qcft::bracket(-4, 4);
    CHECK(b.linear == 8);
    CHECK(b.central == Rational(5));
    b = qcft::bracket(1, 1);
    CHECK(b.linear == 0);
    CHECK(b.central.is_zero());
}

TEST_CASE("bracket satisfies the Jacobi identity")
{
    for (long m = -6; m <= 6; ++m) {
        for (long n = -6; n <= 6; ++n) {
            const auto mn = qcft::bracket(m, n);
            const auto nm = qcft::bracket(n, m);
            CHECK(mn.linear == -nm.linear);
            CHECK(mn.central == -nm.central);
            for (long k = -6; k <= 6; ++k) {
                const auto a = mode(m), b = mode(n), c = mode(k);
                CHECK(is_zero(lie(a, lie(b, c)) + lie(b, lie(c, a)) + lie(c, lie(a, b))));
            }
        }
    }
}

TEST_CASE("Verma bases")
{
    CHECK(qcft::verma_basis(1, true).empty());
    CHECK(qcft::verma_basis(4, true) == std::vector<qcft::VirasoroMonomial>{{2, 2}, {4}});
    CHECK(qcft::verma_basis(2, false) == std::vector<qcft::VirasoroMonomial>{{1, 1}, {2}});
    CHECK(qcft::verma_basis(6, false).size() == 11);
    CHECK(qcft::verma_basis(6, true).size() == 4);
}

TEST_CASE("frozen Gram matrices")
{
    const auto g2 = qcft::gram_matrix(2, false);
    CHECK(g2.entries[0][0] == Poly2(4) * H * (Poly2(2) * H + Poly2(1)));
    CHECK(g2.entries[0][1] == Poly2(6) * H);
    CHECK(g2.entries[1][0] == Poly2(6) * H);
    CHECK(g2.entries[1][1] == Poly2(4) * H + Poly2(Rational(1, 2)) * C);

    const auto g4 = qcft::gram_matrix(4, true);
    CHECK(g4.entries[0][0] == (Poly2(8) + C) * C * Poly2(Rational(1, 2)));
    CHECK(g4.entries[0][1] == Poly2(3) * C);
    CHECK(g4.entries[1][1] == Poly2(5) * C);
    CHECK(qcft::determinant(g4.entries) == C * C * (Poly2(5) * C + Poly2(22)) * Poly2(Rational(1, 2)));
    CHECK(qcft::determinant(g4.entries).to_string() == "(5/2)*c^3 + 11*c^2");

    CHECK(qcft::gram_matrix(1, true).entries.empty());
    CHECK_THROWS_AS(qcft::gram_matrix(7, false), qcft::LevelTooLarge);
    CHECK_THROWS_AS(qcft::gram_matrix(0, false), qcft::LevelTooLarge);
}

TEST_CASE("Gram matrices agree with an independent Verma module computation")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    for (unsigned level = 1; level <= 6; ++level) {
        for (const bool vacuum : {false, true}) {
            const auto gram = qcft::gram_matrix(level, vacuum);
            for (int trial = 0; trial < 2; ++trial) {
                const Rational c(num(rng), den(rng));
                const Rational h = vacuum ? Rational(0) : Rational(num(rng), den(rng));
                const oracle::VermaModule module(c, h);
                for (std::size_t i = 0; i < gram.basis.size(); ++i) {
                    for (std::size_t j = 0; j < gram.basis.size(); ++j) {
                        const std::vector<long> u(gram.basis[i].begin(), gram.basis[i].end());
                        const std::vector<long> v(gram.basis[j].begin(), gram.basis[j].end());
                        CHECK(gram.entries[i][j] == gram.entries[j][i]);
                        CHECK(gram.entries[i][j].evaluate(c, h) == module.inner(u, v));
                    }
                }
            }
        }
    }
}

TEST_CASE("Kac determinant vanishes on the Kac table")
{
    // Level-2 determinant = 32 (h - h_{1,1}) (h - h_{1,2}) (h - h_{2,1}) at any c.
    const auto det = qcft::determinant(qcft::gram_matrix(2, false).entries);
    for (const qcft::MinimalModelLabel m : {qcft::MinimalModelLabel{2, 5}, qcft::MinimalModelLabel{3, 4},
                                            qcft::MinimalModelLabel{3, 5}}) {
        const auto c = qcft::central_charge(m);
        CHECK(det.evaluate(c, qcft::kac_weight(m, 1, 2)).is_zero());
        CHECK(det.evaluate(c, qcft::kac_weight(m, 2, 1)).is_zero());
        CHECK(!det.evaluate(c, Rational(7, 3)).is_zero());
    }
}

TEST_CASE("null vector")
{
    const auto report = qcft::null_vector_central_charges();
    CHECK(report.central_charges == std::vector<Rational>{Rational(-22, 5)});
    CHECK(qcft::determinant_at(qcft::gram_matrix(2, false), Rational(-22, 5), Rational(-1, 5)).is_zero());
    CHECK(!qcft::determinant_at(qcft::gram_matrix(4, true), Rational(1, 2), 0).is_zero());

    // The reported combination is orthogonal to the whole level-4 vacuum space at c = -22/5.
    const oracle::VermaModule module(Rational(-22, 5), 0);
    for (const std::vector<long> u : {std::vector<long>{2, 2}, std::vector<long>{4}}) {
        CHECK((module.inner(u, {2, 2}) + report.beta * module.inner(u, {4})).is_zero());
    }
    CHECK(report.beta == Rational(-3, 5));
    CHECK(report.d2t_coefficient == Rational(3, 10));
}

TEST_CASE("minimal model constants")
{
    CHECK(qcft::central_charge({2, 5}) == Rational(-22, 5));
    CHECK(qcft::central_charge({3, 4}) == Rational(1, 2));
    CHECK(qcft::central_charge({2, 3}) == 0);
    CHECK(qcft::effective_central_charge({2, 5}) == Rational(2, 5));
    CHECK(qcft::effective_central_charge({3, 4}) == Rational(1, 2));
    CHECK(qcft::kac_weight({2, 5}, 1, 2) == Rational(-1, 5));
    CHECK(Rational(11, 60) == -qcft::central_charge({2, 5}) / 24);
    CHECK(Rational(-1, 60) == -qcft::effective_central_charge({2, 5}) / 24);

    const auto scan = qcft::minimize_effective_central_charge(100);
    CHECK(scan.minimizer.p == 2);
    CHECK(scan.minimizer.q == 5);
    CHECK(scan.minimum == Rational(2, 5));
    CHECK(scan.unique);
    CHECK(qcft::minimize_effective_central_charge(100, true).minimum == 0);

    CHECK_THROWS_AS(qcft::MinimalModelLabel({4, 6}).validate(), qcft::InvalidLabel);
    CHECK_THROWS_AS(qcft::MinimalModelLabel({5, 3}).validate(), qcft::InvalidLabel);
    CHECK_THROWS_AS(qcft::MinimalModelLabel({1, 3}).validate(), qcft::InvalidLabel);
}

TEST_CASE("(2,5) characters")
{
    const std::size_t n = qcft::default_order;
    const auto v0 = qcft::character_25(qcft::Sector25::V0, n);
    const auto vm = qcft::character_25(qcft::Sector25::Vm15, n);
    CHECK(v0 == FracQSeries::one(n, Rational(11, 60)) * qcft::rr_product(qcft::RRProduct::H, n));
    CHECK(vm == FracQSeries::one(n, Rational(-1, 60)) * qcft::rr_product(qcft::RRProduct::G, n));
    CHECK(v0[6] == 2);
}

TEST_CASE("(2,5) torus partition function")
{
    using qcft::Complex;
    CHECK(qcft::torus_partition_function_25(Complex(0, 1)) == qcft::torus_partition_function_25(Complex(0, 1)));
    for (const double s : {0.7, 1.3, 2.0}) {
        const double a = qcft::torus_partition_function_25(Complex(0, s));
        const double b = qcft::torus_partition_function_25(Complex(0, 1 / s));
        CHECK(std::abs(a - b) < 1e-8);
    }
    const double y = 20.0;
    const double leading = std::exp(2 * qcft::pi * y / 30.0);
    CHECK(qcft::torus_partition_function_25(Complex(0, y)) / leading == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(qcft::torus_partition_function_25(Complex(0, 0.05), 20), qcft::TruncationTooShort);
}

TEST_CASE("Serre derivative and the modular ODE")
{
    const std::size_t n = 80;
    CHECK(qcft::serre_derivative(FracQSeries::one(n), 0, n).is_zero());
    const auto s4 = qcft::serre_derivative(qcft::eisenstein(4, n), 4, n);
    CHECK(s4 == Rational(-1, 3) * qcft::eisenstein(6, n));
    CHECK(s4[0] == Rational(-1, 3));
    CHECK(qcft::serre_derivative(qcft::eisenstein(4, 2 * n), 4, 2 * n).truncated(n) == s4);
    const auto power = qcft::serre_derivative(FracQSeries::one(n, Rational(3, 7)), 0, n);
    CHECK(power[0] == Rational(3, 7));

    for (const auto sector : {qcft::Sector25::V0, qcft::Sector25::Vm15}) {
        const auto residual = qcft::ode_residual(sector, qcft::default_order);
        CHECK(residual.is_zero());
        CHECK(residual.horizon() >= Rational(200));
        CHECK(!qcft::ode_residual(sector, 12, Rational(1, 360)).is_zero());
    }
}

TEST_CASE("scale anomaly")
{
    CHECK(qcft::scale_anomaly(Rational(-22, 5), 1, 3.7) == 1.0);
    CHECK(qcft::scale_anomaly(0, 0, 3.7) == 1.0);
    CHECK(qcft::scale_anomaly(Rational(-22, 5), 0, 2.0) == doctest::Approx(std::pow(2.0, -11.0 / 15.0)).epsilon(1e-15));
}
