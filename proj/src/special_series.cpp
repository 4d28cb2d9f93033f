#include <qcft/special_series.hpp>

#include <cmath>
#include <stdexcept>

#include <qcft/errors.hpp>

namespace qcft {

namespace detail {

void multiply_binomial(std::vector<BigInt> &c, std::size_t e, int sign)
{
    if (e == 0) {
        throw std::invalid_argument("multiply_binomial: exponent must be positive");
    }
    for (std::size_t n = c.size(); n-- > e;) {
        if (sign < 0) {
            c[n] -= c[n - e];
        } else {
            c[n] += c[n - e];
        }
    }
}

void divide_binomial(std::vector<BigInt> &c, std::size_t e, int sign)
{
    if (e == 0) {
        throw std::invalid_argument("divide_binomial: exponent must be positive");
    }
    for (std::size_t n = e; n < c.size(); ++n) {
        if (sign < 0) {
            c[n] += c[n - e];
        } else {
            c[n] -= c[n - e];
        }
    }
}

} // namespace detail

DivisorSumTable divisor_sums(unsigned k, std::size_t max_n)
{
    DivisorSumTable table{k, std::vector<BigInt>(max_n + 1)};
    for (std::size_t d = 1; d <= max_n; ++d) {
        BigInt dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
        for (std::size_t m = d; m <= max_n; m += d) {
            table.values[m] += dk;
        }
    }
    return table;
}

FracQSeries dedekind_eta(std::size_t order)
{
    if (order == 0) {
        throw std::invalid_argument("dedekind_eta: order must be at least 1");
    }
    std::vector<BigInt> c(order);
    c[0] = 1;
    for (std::size_t n = 1; n < order; ++n) {
        detail::multiply_binomial(c, n, -1);
    }
    return FracQSeries::from_bigints(Rational(1, 24), c);
}

FracQSeries eisenstein(unsigned k, std::size_t order)
{
    long factor = 0;
    switch (k) {
    case 2: factor = -24; break;
    case 4: factor = 240; break;
    case 6: factor = -504; break;
    default: throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
    }
    if (order == 0) {
        throw std::invalid_argument("eisenstein: order must be at least 1");
    }
    const auto sigma = divisor_sums(k - 1, order - 1);
    std::vector<BigInt> c(order);
    c[0] = 1;
    for (std::size_t n = 1; n < order; ++n) {
        c[n] = factor * sigma.values[n];
    }
    return FracQSeries::from_bigints(Rational(0), c);
}

FracQSeries rr_product(RRProduct which, std::size_t order)
{
    if (order == 0) {
        throw std::invalid_argument("rr_product: order must be at least 1");
    }
    const std::size_t r1 = which == RRProduct::G ? 1 : 2;
    const std::size_t r2 = 5 - r1;
    std::vector<BigInt> c(order);
    c[0] = 1;
    for (std::size_t base = 0; base < order; base += 5) {
        for (const std::size_t e : {base + r1, base + r2}) {
            if (e < order) {
                detail::divide_binomial(c, e, -1);
            }
        }
    }
    return FracQSeries::from_bigints(Rational(0), c);
}

std::size_t adaptive_product_cutoff(double abs_q)
{
    if (abs_q <= 0.0) {
        return 1;
    }
    if (abs_q >= 1.0) {
        throw NotInUpperHalfPlane("nome modulus must be below 1");
    }
    return static_cast<std::size_t>(std::ceil(std::log(tail_epsilon) / std::log(abs_q))) + 1;
}

Complex eta_eval(Complex tau, std::size_t cutoff)
{
    const Complex q = nome(tau);
    if (cutoff == 0) {
        cutoff = adaptive_product_cutoff(std::abs(q));
    }
    Complex prod = std::exp(Complex(0.0, 2.0 * pi / 24.0) * tau);
    Complex qn = 1.0;
    for (std::size_t n = 1; n <= cutoff; ++n) {
        qn *= q;
        prod *= 1.0 - qn;
    }
    return prod;
}

} // namespace qcft
