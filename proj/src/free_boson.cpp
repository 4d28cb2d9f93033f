#include <qcft/free_boson.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <qcft/errors.hpp>
#include <qcft/special_series.hpp>

namespace qcft {

TorusModulus::TorusModulus(Complex t) : tau(t)
{
    require_upper_half_plane(t, "TorusModulus");
}

namespace {

void require_radius(double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw NonpositiveRadius("radius " + format_short(radius) + " is not a positive real");
    }
}

// Fixed-order pairwise sum, so results do not depend on accumulation order
// choices elsewhere.
template <typename T>
T pairwise_sum(const std::vector<T> &values, std::size_t lo, std::size_t hi)
{
    if (hi - lo <= 8) {
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) {
            acc += values[i];
        }
        return acc;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(values, lo, mid) + pairwise_sum(values, mid, hi);
}

template <typename T>
T pairwise_sum(const std::vector<T> &values)
{
    return values.empty() ? T{} : pairwise_sum(values, 0, values.size());
}

} // namespace

MomentumWindingTerm momentum_winding_term(double radius, long n, long w)
{
    require_radius(radius);
    const double p_left = static_cast<double>(n) / radius + static_cast<double>(w) * radius / 2.0;
    const double p_right = static_cast<double>(n) / radius - static_cast<double>(w) * radius / 2.0;
    return {n, w, p_left * p_left / 2.0, p_right * p_right / 2.0};
}

std::size_t adaptive_lattice_cutoff(double radius, double im_tau)
{
    require_radius(radius);
    // |summand| = exp(-2 pi Im tau (n^2/R^2 + w^2 R^2/4)).
    const double budget = -std::log(tail_epsilon) / (2.0 * pi * im_tau);
    const double n_max = radius * std::sqrt(budget);
    const double w_max = 2.0 / radius * std::sqrt(budget);
    return static_cast<std::size_t>(std::ceil(std::max(n_max, w_max))) + 1;
}

Complex theta_lattice_sum(double radius, const TorusModulus &tau, std::size_t cutoff)
{
    require_radius(radius);
    if (cutoff == 0) {
        cutoff = adaptive_lattice_cutoff(radius, tau.tau.imag());
    }
    const long cut = static_cast<long>(cutoff);
    const Complex two_pi_i_tau = Complex(0.0, 2.0 * pi) * tau.tau;
    const Complex two_pi_i_tau_bar = Complex(0.0, 2.0 * pi) * std::conj(tau.tau);
    std::vector<Complex> terms;
    terms.reserve(static_cast<std::size_t>((2 * cut + 1) * (2 * cut + 1)));
    for (long n = -cut; n <= cut; ++n) {
        for (long w = -cut; w <= cut; ++w) {
            const auto t = momentum_winding_term(radius, n, w);
            // q^{h_L} qbar^{h_R} = exp(2 pi i tau h_L - 2 pi i conj(tau) h_R)
            terms.push_back(std::exp(two_pi_i_tau * t.h_left - two_pi_i_tau_bar * t.h_right));
        }
    }
    return pairwise_sum(terms);
}

double boson_partition_function(double radius, const TorusModulus &tau)
{
    const Complex theta = theta_lattice_sum(radius, tau);
    return theta.real() / std::norm(eta_eval(tau.tau));
}

double twisted_boson_partition_function(const TorusModulus &tau, std::size_t cutoff)
{
    const Complex q = nome(tau.tau);
    if (cutoff == 0) {
        cutoff = adaptive_product_cutoff(std::abs(q));
    }
    Complex prod = 1.0;
    Complex qn = 1.0;
    for (std::size_t n = 1; n <= cutoff; ++n) {
        qn *= q;
        prod *= 1.0 + qn;
    }
    return 1.0 / std::norm(prod);
}

void LatticeSpec::validate() const
{
    if (sites_x < 4 || sites_y < 4) {
        throw std::invalid_argument("LatticeSpec: need at least 4 sites per direction");
    }
    if (!(length_x > 0.0) || !(length_y > 0.0)) {
        throw std::invalid_argument("LatticeSpec: lengths must be positive");
    }
}

namespace {

void require_masses(double m1, double m2)
{
    if (!(m1 > 0.0) || !(m2 > 0.0)) {
        throw std::invalid_argument("determinant ratio: masses must be positive");
    }
}

// log((lambda + m1^2)/(lambda + m2^2)) written as a difference of logs so that
// exchanging the masses negates it exactly.
double log_ratio_term(double lambda, double m1, double m2)
{
    return std::log(lambda + m1 * m1) - std::log(lambda + m2 * m2);
}

} // namespace

double lattice_determinant_ratio(const LatticeSpec &spec, double m1, double m2)
{
    spec.validate();
    require_masses(m1, m2);
    if (m1 == m2) {
        return 1.0;
    }
    const double ax = spec.length_x / static_cast<double>(spec.sites_x);
    const double ay = spec.length_y / static_cast<double>(spec.sites_y);
    std::vector<double> terms;
    terms.reserve(spec.sites_x * spec.sites_y);
    for (std::size_t j = 0; j < spec.sites_x; ++j) {
        const double ex = 2.0 / (ax * ax) * (1.0 - std::cos(2.0 * pi * static_cast<double>(j) / static_cast<double>(spec.sites_x)));
        for (std::size_t k = 0; k < spec.sites_y; ++k) {
            const double ey = 2.0 / (ay * ay) * (1.0 - std::cos(2.0 * pi * static_cast<double>(k) / static_cast<double>(spec.sites_y)));
            terms.push_back(log_ratio_term(ex + ey, m1, m2));
        }
    }
    return std::exp(pairwise_sum(terms));
}

double continuum_determinant_ratio(std::pair<double, double> lengths, double m1, double m2, std::size_t cutoff)
{
    require_masses(m1, m2);
    if (!(lengths.first > 0.0) || !(lengths.second > 0.0)) {
        throw std::invalid_argument("continuum_determinant_ratio: lengths must be positive");
    }
    if (m1 == m2) {
        return 1.0;
    }
    const long cut = static_cast<long>(cutoff);
    std::vector<double> row;
    std::vector<double> rows;
    row.reserve(static_cast<std::size_t>(2 * cut + 1));
    rows.reserve(static_cast<std::size_t>(2 * cut + 1));
    for (long j = -cut; j <= cut; ++j) {
        const double kx = 2.0 * pi * static_cast<double>(j) / lengths.first;
        row.clear();
        for (long k = -cut; k <= cut; ++k) {
            const double ky = 2.0 * pi * static_cast<double>(k) / lengths.second;
            row.push_back(log_ratio_term(kx * kx + ky * ky, m1, m2));
        }
        rows.push_back(pairwise_sum(row));
    }
    return std::exp(pairwise_sum(rows));
}

} // namespace qcft
