#include <doctest.h>

#include <cmath>

#include <qcft/errors.hpp>
#include <qcft/mock_modular.hpp>
#include <qcft/special_series.hpp>

using qcft::Complex;
using qcft::JacobiPoint;

namespace {

const Complex I(0, 1);
const std::vector<Complex> taus{Complex(0, 1), Complex(0.1, 1.0), Complex(-0.3, 0.8), Complex(0.45, 0.6)};

Complex theta(int k, Complex z, Complex tau) { return qcft::jacobi_theta(k, JacobiPoint{z, tau}); }

} // namespace

TEST_CASE("theta constants")
{
    for (const Complex tau : taus) {
        CHECK(std::abs(theta(1, 0, tau)) < 1e-15);
        const auto t2 = theta(2, 0, tau), t3 = theta(3, 0, tau), t4 = theta(4, 0, tau);
        CHECK(std::abs(std::pow(t3, 4) - std::pow(t2, 4) - std::pow(t4, 4)) < 1e-10);
        // theta_2 theta_3 theta_4 = 2 eta^3
        CHECK(std::abs(t2 * t3 * t4 - 2.0 * std::pow(qcft::eta_eval(tau), 3)) < 1e-10);
    }
    CHECK(std::abs(theta(2, 0, I) - theta(4, 0, I)) < 1e-10);
}

TEST_CASE("theta functions in z")
{
    const Complex z(0.23, 0.11);
    for (const Complex tau : taus) {
        CHECK(std::abs(theta(1, z + 1.0, tau) + theta(1, z, tau)) < 1e-10);
        CHECK(std::abs(theta(1, -z, tau) + theta(1, z, tau)) < 1e-10);
        CHECK(std::abs(theta(3, -z, tau) - theta(3, z, tau)) < 1e-10);
        // theta_1(z + tau) = -q^{-1/2} y^{-1} theta_1(z)
        const Complex shifted = -std::exp(-I * qcft::pi * tau - 2.0 * I * qcft::pi * z) * theta(1, z, tau);
        CHECK(std::abs(theta(1, z + tau, tau) - shifted) < 1e-10 * std::max(1.0, std::abs(shifted)));
    }
    CHECK_THROWS_AS(qcft::jacobi_theta(5, JacobiPoint{z, I}), std::invalid_argument);
    CHECK_THROWS_AS(qcft::jacobi_theta(1, JacobiPoint{z, Complex(0.1, -1)}), qcft::NotInUpperHalfPlane);
}

TEST_CASE("K3 elliptic genus")
{
    const Complex z(0.17, 0.05);
    for (const Complex tau : taus) {
        CHECK(std::abs(qcft::elliptic_genus_k3(JacobiPoint{0, tau}) - 24.0) < 1e-10);
        const auto eg = qcft::elliptic_genus_k3(JacobiPoint{z, tau});
        CHECK(std::abs(qcft::elliptic_genus_k3(JacobiPoint{z + 1.0, tau}) - eg) < 1e-10);
        CHECK(std::abs(qcft::elliptic_genus_k3(JacobiPoint{-z, tau}) - eg) < 1e-10);
    }
}

TEST_CASE("Appell-Lerch function")
{
    const Complex tau(0.1, 1.0), z(0.2, 0.1);
    const auto coarse = qcft::appell_lerch_mu(JacobiPoint{z, tau, 12});
    const auto fine = qcft::appell_lerch_mu(JacobiPoint{z, tau, 24});
    CHECK(std::abs(coarse - fine) < 1e-12);
    const auto adaptive = qcft::appell_lerch_mu(JacobiPoint{z, tau});
    CHECK(std::abs(adaptive - fine) < 1e-12);

    // y^{1/2} and theta_1 both flip sign under z -> z + 1, and the lattice sum
    // is invariant under z -> z + tau up to exactly the factor theta_1 picks up.
    const auto shifted = qcft::appell_lerch_mu(JacobiPoint{z + tau, tau});
    CHECK(std::abs(shifted - adaptive) < 1e-8);
    CHECK(std::abs(qcft::appell_lerch_mu(JacobiPoint{z + 1.0, tau}) - adaptive) < 1e-10);

    double previous = 0;
    for (const double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const double size = std::abs(qcft::appell_lerch_mu(JacobiPoint{Complex(eps, 0.3 * eps), tau}));
        CHECK(size > previous);
        previous = size;
    }
}

TEST_CASE("the remainder is independent of z only for kappa = 24")
{
    const Complex tau(0.05, 1.0);
    const auto a = qcft::mock_remainder(JacobiPoint{Complex(0.2, 0.1), tau});
    const auto b = qcft::mock_remainder(JacobiPoint{Complex(0.31, -0.07), tau});
    CHECK(std::abs(a - b) < 1e-9);
    const auto c = qcft::mock_remainder(JacobiPoint{Complex(0.2, 0.1), tau}, 23.0);
    const auto d = qcft::mock_remainder(JacobiPoint{Complex(0.31, -0.07), tau}, 23.0);
    CHECK(std::abs(c - d) > 1e-3);
}

TEST_CASE("mock coefficient extraction")
{
    const std::vector<long> expected{-1, 45, 231, 770, 2277};
    for (const double y0 : {0.2, 0.3, 0.4}) {
        for (const std::size_t grid : {128u, 256u}) {
            qcft::MockExtractionOptions o;
            o.y0 = y0;
            o.grid = grid;
            const auto m = qcft::extract_mock_coefficients(o);
            CHECK(m.values == expected);
            CHECK(m.max_z_deviation < 1e-6);
            CHECK(m.scale == qcft::Rational(2));
        }
    }
    qcft::MockExtractionOptions bad;
    bad.kappa = 23.0;
    CHECK_THROWS_AS(qcft::extract_mock_coefficients(bad), qcft::ZDependenceDetected);
}
