#include <qcft/series.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <qcft/errors.hpp>

namespace qcft {

FracQSeries::FracQSeries(Rational prefactor, std::vector<Rational> coeffs)
    : prefactor_(std::move(prefactor)), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("FracQSeries: order must be at least 1");
    }
}

FracQSeries FracQSeries::one(std::size_t order, Rational prefactor)
{
    std::vector<Rational> c(order);
    if (order > 0) {
        c[0] = 1;
    }
    return {std::move(prefactor), std::move(c)};
}

FracQSeries FracQSeries::zero(std::size_t order, Rational prefactor)
{
    return {std::move(prefactor), std::vector<Rational>(order)};
}

FracQSeries FracQSeries::from_integers(Rational prefactor, const std::vector<long> &coeffs, std::size_t order)
{
    std::vector<Rational> c(order);
    for (std::size_t n = 0; n < std::min(order, coeffs.size()); ++n) {
        c[n] = coeffs[n];
    }
    return {std::move(prefactor), std::move(c)};
}

FracQSeries FracQSeries::from_bigints(Rational prefactor, const std::vector<BigInt> &coeffs)
{
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto &v : coeffs) {
        c.emplace_back(v);
    }
    return {std::move(prefactor), std::move(c)};
}

bool FracQSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c.is_zero(); });
}

FracQSeries FracQSeries::normalized() const
{
    const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return !c.is_zero(); });
    if (first == coeffs_.end() || first == coeffs_.begin()) {
        return *this;
    }
    const auto shift = static_cast<long>(first - coeffs_.begin());
    return {prefactor_ + Rational(shift), std::vector<Rational>(first, coeffs_.end())};
}

FracQSeries FracQSeries::truncated(std::size_t order) const
{
    if (order == 0 || order > coeffs_.size()) {
        throw std::invalid_argument("FracQSeries::truncated: order out of range");
    }
    return {prefactor_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order))};
}

namespace {

// Returns the integer offset a_g - a_f, or throws when it is not integral.
long prefactor_offset(const FracQSeries &f, const FracQSeries &g)
{
    const Rational diff = g.prefactor() - f.prefactor();
    if (!diff.is_integer()) {
        throw NonAlignablePrefactor("q^" + f.prefactor().to_string() + " and q^" + g.prefactor().to_string()
                                    + " differ by a non-integer exponent");
    }
    return diff.to_long();
}

FracQSeries combine(const FracQSeries &f, const FracQSeries &g, bool subtract)
{
    const long offset = prefactor_offset(f, g);
    const FracQSeries &lo = offset >= 0 ? f : g;
    const FracQSeries &hi = offset >= 0 ? g : f;
    const auto shift = static_cast<std::size_t>(offset >= 0 ? offset : -offset);

    // Everything below the higher prefactor is known to vanish in `hi`, so
    // the valid range ends at the earlier horizon.
    const std::size_t order = std::min(lo.order(), hi.order() + shift);
    if (order == 0) {
        throw NonAlignablePrefactor("prefactors too far apart for the available orders");
    }
    std::vector<Rational> c(order);
    const bool f_is_lo = offset >= 0;
    for (std::size_t n = 0; n < order; ++n) {
        Rational lo_term = lo[n];
        Rational hi_term = n >= shift ? hi[n - shift] : Rational(0);
        if (subtract) {
            // f - g: negate whichever operand is g.
            if (f_is_lo) {
                hi_term = -hi_term;
            } else {
                lo_term = -lo_term;
            }
        }
        c[n] = lo_term + hi_term;
    }
    return {lo.prefactor(), std::move(c)};
}

} // namespace

FracQSeries add(const FracQSeries &f, const FracQSeries &g)
{
    return combine(f, g, false);
}

FracQSeries sub(const FracQSeries &f, const FracQSeries &g)
{
    return combine(f, g, true);
}

FracQSeries mul(const FracQSeries &f, const FracQSeries &g)
{
    const std::size_t order = std::min(f.order(), g.order());
    std::vector<Rational> c(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (f[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < order; ++j) {
            if (!g[j].is_zero()) {
                c[i + j] += f[i] * g[j];
            }
        }
    }
    return {f.prefactor() + g.prefactor(), std::move(c)};
}

FracQSeries scale(const FracQSeries &f, const Rational &factor)
{
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    for (auto &v : c) {
        v *= factor;
    }
    return {f.prefactor(), std::move(c)};
}

FracQSeries invert(const FracQSeries &f)
{
    if (f[0].is_zero()) {
        throw NonUnitLeadingCoefficient("leading coefficient of the series is zero");
    }
    const std::size_t order = f.order();
    const Rational inv0 = Rational(1) / f[0];
    std::vector<Rational> c(order);
    c[0] = inv0;
    for (std::size_t n = 1; n < order; ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!f[k].is_zero()) {
                acc += f[k] * c[n - k];
            }
        }
        c[n] = -acc * inv0;
    }
    return {-f.prefactor(), std::move(c)};
}

FracQSeries q_derivative(const FracQSeries &f)
{
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] *= f.prefactor() + Rational(static_cast<long>(n));
    }
    return {f.prefactor(), std::move(c)};
}

FracQSeries substitute_power(const FracQSeries &f, unsigned k)
{
    if (k == 0) {
        throw std::invalid_argument("substitute_power: k must be positive");
    }
    std::vector<Rational> c(f.order() * k);
    for (std::size_t n = 0; n < f.order(); ++n) {
        c[n * k] = f[n];
    }
    return {f.prefactor() * Rational(static_cast<long>(k)), std::move(c)};
}

Rational coefficient_at(const FracQSeries &f, const Rational &exponent)
{
    const Rational offset = exponent - f.prefactor();
    if (!offset.is_integer() || offset.sign() < 0 || offset >= Rational(static_cast<long>(f.order()))) {
        throw ExponentOutOfRange("q^" + exponent.to_string() + " is not a stored exponent of q^"
                                 + f.prefactor().to_string() + "(...) + O(q^" + f.horizon().to_string() + ")");
    }
    return f[static_cast<std::size_t>(offset.to_long())];
}

} // namespace qcft
