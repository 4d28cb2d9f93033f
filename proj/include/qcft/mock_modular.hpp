#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <qcft/numeric.hpp>
#include <qcft/rational.hpp>

namespace qcft {

struct JacobiPoint {
    Complex z;
    Complex tau;
    std::size_t cutoff = 0;  // 0: adaptive

    void validate() const;  // throws NotInUpperHalfPlane
};

// Jacobi theta functions with q = exp(2 pi i tau), y = exp(2 pi i z):
//   theta_1 = -i sum (-1)^n q^{(n+1/2)^2/2} y^{n+1/2}
//   theta_2 =    sum        q^{(n+1/2)^2/2} y^{n+1/2}
//   theta_3 =    sum        q^{n^2/2} y^n
//   theta_4 =    sum (-1)^n q^{n^2/2} y^n
Complex jacobi_theta(int index, const JacobiPoint &p);

// 8 sum_{i=2,3,4} (theta_i(z, tau) / theta_i(0, tau))^2
Complex elliptic_genus_k3(const JacobiPoint &p);

// mu(z; tau) = -i y^{1/2} / theta_1(z, tau) * sum_n (-1)^n q^{n(n+1)/2} y^n / (1 - q^n y).
// The -i makes the double pole at z = 0 match that of EG * eta^3 / theta_1^2
// with multiplicity +24.
Complex appell_lerch_mu(const JacobiPoint &p);

// EG(z, tau) eta(tau)^3 / theta_1(z, tau)^2 - kappa * mu(z; tau)
Complex mock_remainder(const JacobiPoint &p, double kappa = 24.0);

struct MockExtractionOptions {
    double y0 = 0.3;
    std::vector<Complex> z_list{Complex(0.2, 0.1), Complex(0.31, -0.07), Complex(0.13, 0.04)};
    std::size_t grid = 128;
    std::size_t terms = 5;
    double kappa = 24.0;
    double z_tolerance = 1e-6;
    double rounding_tolerance = 1e-4;
};

struct MockCoefficients {
    std::vector<long> values;      // coefficients of q^{-1/8+n} after scaling, values[0] = -1
    Rational scale;                // raw integer vector = scale * values
    std::vector<double> raw;       // unrounded real parts (first z)
    double y0 = 0.0;
    std::size_t grid = 0;
    double max_z_deviation = 0.0;
    double max_rounding_error = 0.0;
};

// Samples q^{1/8} * mock_remainder on tau = x + i y0 over a uniform x-grid,
// Fourier-transforms in x and strips the exp(-2 pi n y0) damping.
// Throws ZDependenceDetected or RoundingUnstable.
MockCoefficients extract_mock_coefficients(const MockExtractionOptions &options);

} // namespace qcft
