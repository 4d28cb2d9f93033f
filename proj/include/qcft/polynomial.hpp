#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <qcft/rational.hpp>

namespace qcft {

// Polynomial in the two commuting variables c and h with rational
// coefficients. Terms are keyed by (deg_c, deg_h); zero terms are never stored.
class Poly2 {
public:
    using Exponents = std::pair<unsigned, unsigned>;

    Poly2() = default;
    Poly2(const Rational &constant);  // NOLINT: constants promote implicitly
    Poly2(long constant) : Poly2(Rational(constant)) {}  // NOLINT

    static Poly2 c();
    static Poly2 h();
    static Poly2 monomial(const Rational &coeff, unsigned deg_c, unsigned deg_h);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational> &terms() const { return terms_; }
    Rational coefficient(unsigned deg_c, unsigned deg_h) const;
    unsigned degree_c() const;
    unsigned degree_h() const;

    Rational evaluate(const Rational &c_value, const Rational &h_value) const;
    // Substitutes h and returns the coefficients in c, index = degree.
    std::vector<Rational> univariate_in_c(const Rational &h_value) const;

    Poly2 &operator+=(const Poly2 &o);
    Poly2 &operator-=(const Poly2 &o);
    Poly2 &operator*=(const Poly2 &o);
    friend Poly2 operator+(Poly2 a, const Poly2 &b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2 &b) { return a -= b; }
    friend Poly2 operator*(Poly2 a, const Poly2 &b) { return a *= b; }
    Poly2 operator-() const;
    friend bool operator==(const Poly2 &, const Poly2 &) = default;

    // Exact quotient; throws InexactDivision if `divisor` does not divide.
    Poly2 divide_exact(const Poly2 &divisor) const;

    // e.g. "(1/2)*c^2 + 4*h", "0" for the zero polynomial.
    std::string to_string() const;

private:
    void add_term(const Exponents &e, const Rational &coeff);

    std::map<Exponents, Rational> terms_;
};

// Rational roots of a univariate polynomial (coefficients by degree), with
// multiplicity collapsed. Coefficients need not be integral.
std::vector<Rational> rational_roots(const std::vector<Rational> &coeffs);

} // namespace qcft
