#include <qcft/mock_modular.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <qcft/errors.hpp>
#include <qcft/special_series.hpp>

namespace qcft {

void JacobiPoint::validate() const
{
    require_upper_half_plane(tau, "JacobiPoint");
}

namespace {

constexpr Complex I{0.0, 1.0};
constexpr Complex two_pi_i{0.0, 2.0 * pi};

// Half-width N such that pi Im(tau) n^2 - 2 pi |Im z| n exceeds the tail
// budget for |n| > N.
std::size_t adaptive_theta_cutoff(const JacobiPoint &p)
{
    const double a = pi * p.tau.imag();
    const double b = 2.0 * pi * std::abs(p.z.imag()) + a;
    const double budget = -std::log(tail_epsilon) + 4.0;
    return static_cast<std::size_t>(std::ceil((b + std::sqrt(b * b + 4.0 * a * budget)) / (2.0 * a))) + 2;
}

std::size_t cutoff_for(const JacobiPoint &p)
{
    p.validate();
    return p.cutoff == 0 ? adaptive_theta_cutoff(p) : p.cutoff;
}

} // namespace

Complex jacobi_theta(int index, const JacobiPoint &p)
{
    if (index < 1 || index > 4) {
        throw std::invalid_argument("jacobi_theta: index must be 1..4");
    }
    const long cut = static_cast<long>(cutoff_for(p));
    const bool half_integral = index <= 2;
    const bool alternating = index == 1 || index == 4;
    // Half-integral characteristics run over nu = n + 1/2 with n in [-cut-1, cut],
    // symmetric in nu.
    const long lo = half_integral ? -cut - 1 : -cut;
    Complex sum = 0.0;
    for (long n = lo; n <= cut; ++n) {
        const double nu = half_integral ? static_cast<double>(n) + 0.5 : static_cast<double>(n);
        const Complex term = std::exp(two_pi_i * (p.tau * (nu * nu / 2.0) + p.z * nu));
        sum += (alternating && (n % 2 != 0)) ? -term : term;
    }
    return index == 1 ? -I * sum : sum;
}

Complex elliptic_genus_k3(const JacobiPoint &p)
{
    Complex total = 0.0;
    for (int i = 2; i <= 4; ++i) {
        const Complex at_zero = jacobi_theta(i, {Complex(0.0, 0.0), p.tau, p.cutoff});
        if (std::abs(at_zero) == 0.0) {
            throw ThetaConstantVanishes("theta_" + std::to_string(i) + "(0, tau) = 0");
        }
        const Complex ratio = jacobi_theta(i, p) / at_zero;
        total += ratio * ratio;
    }
    return 8.0 * total;
}

Complex appell_lerch_mu(const JacobiPoint &p)
{
    const long cut = static_cast<long>(cutoff_for(p));
    const Complex theta1 = jacobi_theta(1, p);
    if (std::abs(theta1) < 1e-300) {
        throw ThetaZeroDivision("theta_1(z, tau) vanishes at this z");
    }
    Complex sum = 0.0;
    for (long n = -cut; n <= cut; ++n) {
        const double dn = static_cast<double>(n);
        const Complex qn_y = std::exp(two_pi_i * (p.tau * dn + p.z));
        const Complex denom = 1.0 - qn_y;
        if (std::abs(denom) < 1e-14) {
            throw ThetaZeroDivision("1 - q^n y vanishes for n = " + std::to_string(n));
        }
        const Complex numer = std::exp(two_pi_i * (p.tau * (dn * (dn + 1.0) / 2.0) + p.z * dn));
        sum += ((n % 2 != 0) ? -numer : numer) / denom;
    }
    return -I * std::exp(I * pi * p.z) / theta1 * sum;
}

Complex mock_remainder(const JacobiPoint &p, double kappa)
{
    const Complex theta1 = jacobi_theta(1, p);
    const Complex eta = eta_eval(p.tau);
    return elliptic_genus_k3(p) * eta * eta * eta / (theta1 * theta1) - kappa * appell_lerch_mu(p);
}

MockCoefficients extract_mock_coefficients(const MockExtractionOptions &options)
{
    const std::size_t grid = options.grid;
    if (!(options.y0 >= 0.15 && options.y0 <= 0.5)) {
        throw std::invalid_argument("extract_mock_coefficients: y0 must lie in [0.15, 0.5]");
    }
    if (grid < 64 || (grid & (grid - 1)) != 0) {
        throw std::invalid_argument("extract_mock_coefficients: grid must be a power of two >= 64");
    }
    if (options.terms == 0 || 2 * options.terms >= grid) {
        throw std::invalid_argument("extract_mock_coefficients: terms must be in [1, grid/2)");
    }
    std::vector<Complex> zs;
    for (const auto &z : options.z_list) {
        if (std::none_of(zs.begin(), zs.end(), [&z](const Complex &w) { return std::abs(w - z) < 1e-9; })) {
            zs.push_back(z);
        }
    }
    if (zs.size() < 3) {
        throw std::invalid_argument("extract_mock_coefficients: need at least 3 distinct z values");
    }

    // samples[zi][j] = q^{1/8} A(z_i; x_j + i y0)
    std::vector<std::vector<Complex>> samples(zs.size(), std::vector<Complex>(grid));
    for (std::size_t j = 0; j < grid; ++j) {
        const Complex tau(static_cast<double>(j) / static_cast<double>(grid), options.y0);
        const Complex q_eighth = std::exp(two_pi_i * tau / 8.0);
        for (std::size_t zi = 0; zi < zs.size(); ++zi) {
            samples[zi][j] = q_eighth * mock_remainder({zs[zi], tau, 0}, options.kappa);
        }
    }

    MockCoefficients out;
    out.y0 = options.y0;
    out.grid = grid;
    for (std::size_t zi = 1; zi < zs.size(); ++zi) {
        for (std::size_t j = 0; j < grid; ++j) {
            out.max_z_deviation = std::max(out.max_z_deviation, std::abs(samples[zi][j] - samples[0][j]));
        }
    }

    // coeffs[zi][n] = e^{2 pi n y0} (1/M) sum_j F(x_j) e^{-2 pi i n x_j}
    std::vector<std::vector<Complex>> coeffs(zs.size(), std::vector<Complex>(options.terms));
    for (std::size_t zi = 0; zi < zs.size(); ++zi) {
        for (std::size_t n = 0; n < options.terms; ++n) {
            Complex acc = 0.0;
            for (std::size_t j = 0; j < grid; ++j) {
                const double x = static_cast<double>(j) / static_cast<double>(grid);
                acc += samples[zi][j] * std::exp(-two_pi_i * (static_cast<double>(n) * x));
            }
            coeffs[zi][n] = acc / static_cast<double>(grid) * std::exp(2.0 * pi * static_cast<double>(n) * options.y0);
        }
        if (zi > 0) {
            for (std::size_t n = 0; n < options.terms; ++n) {
                out.max_z_deviation = std::max(out.max_z_deviation, std::abs(coeffs[zi][n] - coeffs[0][n]));
            }
        }
    }
    if (!(out.max_z_deviation < options.z_tolerance)) {
        throw ZDependenceDetected("remainder varies with z by " + format_decimal(out.max_z_deviation)
                                  + " (kappa = " + format_short(options.kappa) + ")");
    }

    std::vector<long> rounded(options.terms);
    for (std::size_t n = 0; n < options.terms; ++n) {
        const Complex c = coeffs[0][n];
        out.raw.push_back(c.real());
        const double nearest = std::round(c.real());
        const double error = std::max(std::abs(c.real() - nearest), std::abs(c.imag()));
        out.max_rounding_error = std::max(out.max_rounding_error, error);
        if (!(error < options.rounding_tolerance)) {
            throw RoundingUnstable("mode " + std::to_string(n) + " = " + format_decimal(c.real()) + " + "
                                   + format_decimal(c.imag()) + "i is not within "
                                   + format_short(options.rounding_tolerance) + " of an integer");
        }
        rounded[n] = static_cast<long>(nearest);
    }
    if (rounded[0] == 0) {
        throw RoundingUnstable("leading coefficient rounds to zero");
    }
    out.scale = Rational(-rounded[0]);
    for (const long v : rounded) {
        const Rational scaled = Rational(v) / out.scale;
        if (!scaled.is_integer()) {
            throw RoundingUnstable("coefficient " + std::to_string(v) + " is not a multiple of the scale "
                                   + out.scale.to_string());
        }
        out.values.push_back(scaled.to_long());
    }
    return out;
}

} // namespace qcft
