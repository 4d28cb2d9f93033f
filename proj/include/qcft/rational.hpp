#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qcft {

using BigInt = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}                // NOLINT: implicit by design of the arithmetic
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
    Rational(const BigInt &value) : value_(value) {}       // NOLINT
    Rational(long num, long den);
    Rational(const BigInt &num, const BigInt &den);

    // Parses "p/q", "-p/q" or a bare integer "p".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }

    // Floor for integral values; throws std::domain_error otherwise.
    long to_long() const;

    // Canonical "p/q" form, e.g. "-1/60", "0/1", "45/1".
    std::string to_string() const;

    Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
    Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
    Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class &raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

Rational abs(const Rational &r);
Rational pow(const Rational &base, unsigned exponent);

} // namespace qcft
