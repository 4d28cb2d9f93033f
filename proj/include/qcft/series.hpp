#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <qcft/rational.hpp>

namespace qcft {

// Default truncation: coefficients through q^{a+200}.
inline constexpr std::size_t default_order = 201;

// Truncated q-series q^a * (c_0 + c_1 q + ... + c_{N-1} q^{N-1}) + O(q^{a+N})
// with exact rational coefficients. The single rational prefactor `a` keeps
// the Cauchy product integer-indexed while letting characters such as
// q^{-1/60} G(q) be represented directly.
class FracQSeries {
public:
    // order = coeffs.size(), which must be at least 1.
    FracQSeries(Rational prefactor, std::vector<Rational> coeffs);

    static FracQSeries one(std::size_t order, Rational prefactor = Rational(0));
    static FracQSeries zero(std::size_t order, Rational prefactor = Rational(0));
    // q^prefactor * (sum of coeffs), helper for building series from integers.
    static FracQSeries from_integers(Rational prefactor, const std::vector<long> &coeffs, std::size_t order);
    static FracQSeries from_bigints(Rational prefactor, const std::vector<BigInt> &coeffs);

    const Rational &prefactor() const { return prefactor_; }
    std::size_t order() const { return coeffs_.size(); }
    std::span<const Rational> coeffs() const { return coeffs_; }
    const Rational &operator[](std::size_t n) const { return coeffs_[n]; }

    bool is_zero() const;
    // Exponent a + N: first exponent whose coefficient is unknown.
    Rational horizon() const { return prefactor_ + Rational(static_cast<long>(coeffs_.size())); }

    // Drops leading zero coefficients into the prefactor. A zero series is
    // returned unchanged.
    FracQSeries normalized() const;
    FracQSeries truncated(std::size_t order) const;

    friend bool operator==(const FracQSeries &, const FracQSeries &) = default;

private:
    Rational prefactor_;
    std::vector<Rational> coeffs_;
};

FracQSeries add(const FracQSeries &f, const FracQSeries &g);
FracQSeries sub(const FracQSeries &f, const FracQSeries &g);
FracQSeries mul(const FracQSeries &f, const FracQSeries &g);
FracQSeries scale(const FracQSeries &f, const Rational &factor);
FracQSeries invert(const FracQSeries &f);
FracQSeries q_derivative(const FracQSeries &f);
FracQSeries substitute_power(const FracQSeries &f, unsigned k);
Rational coefficient_at(const FracQSeries &f, const Rational &exponent);

inline FracQSeries operator+(const FracQSeries &f, const FracQSeries &g) { return add(f, g); }
inline FracQSeries operator-(const FracQSeries &f, const FracQSeries &g) { return sub(f, g); }
inline FracQSeries operator*(const FracQSeries &f, const FracQSeries &g) { return mul(f, g); }
inline FracQSeries operator*(const Rational &c, const FracQSeries &f) { return scale(f, c); }

} // namespace qcft
