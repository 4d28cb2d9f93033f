#include <qcft/polynomial.hpp>

#include <algorithm>
#include <set>

#include <qcft/errors.hpp>

namespace qcft {

Poly2::Poly2(const Rational &constant)
{
    add_term({0, 0}, constant);
}

Poly2 Poly2::c()
{
    return monomial(Rational(1), 1, 0);
}

Poly2 Poly2::h()
{
    return monomial(Rational(1), 0, 1);
}

Poly2 Poly2::monomial(const Rational &coeff, unsigned deg_c, unsigned deg_h)
{
    Poly2 p;
    p.add_term({deg_c, deg_h}, coeff);
    return p;
}

void Poly2::add_term(const Exponents &e, const Rational &coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational Poly2::coefficient(unsigned deg_c, unsigned deg_h) const
{
    const auto it = terms_.find({deg_c, deg_h});
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly2::degree_c() const
{
    unsigned d = 0;
    for (const auto &[e, _] : terms_) {
        d = std::max(d, e.first);
    }
    return d;
}

unsigned Poly2::degree_h() const
{
    unsigned d = 0;
    for (const auto &[e, _] : terms_) {
        d = std::max(d, e.second);
    }
    return d;
}

Rational Poly2::evaluate(const Rational &c_value, const Rational &h_value) const
{
    Rational total;
    for (const auto &[e, coeff] : terms_) {
        total += coeff * pow(c_value, e.first) * pow(h_value, e.second);
    }
    return total;
}

std::vector<Rational> Poly2::univariate_in_c(const Rational &h_value) const
{
    std::vector<Rational> out(degree_c() + 1);
    for (const auto &[e, coeff] : terms_) {
        out[e.first] += coeff * pow(h_value, e.second);
    }
    return out;
}

Poly2 &Poly2::operator+=(const Poly2 &o)
{
    for (const auto &[e, coeff] : o.terms_) {
        add_term(e, coeff);
    }
    return *this;
}

Poly2 &Poly2::operator-=(const Poly2 &o)
{
    for (const auto &[e, coeff] : o.terms_) {
        add_term(e, -coeff);
    }
    return *this;
}

Poly2 &Poly2::operator*=(const Poly2 &o)
{
    Poly2 out;
    for (const auto &[ea, ca] : terms_) {
        for (const auto &[eb, cb] : o.terms_) {
            out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

Poly2 Poly2::operator-() const
{
    Poly2 out;
    for (const auto &[e, coeff] : terms_) {
        out.add_term(e, -coeff);
    }
    return out;
}

namespace {

// Lexicographic leading term, c before h.
Poly2::Exponents leading(const Poly2 &p)
{
    return p.terms().rbegin()->first;
}

} // namespace

Poly2 Poly2::divide_exact(const Poly2 &divisor) const
{
    if (divisor.is_zero()) {
        throw InexactDivision("division by the zero polynomial");
    }
    const auto lead_d = leading(divisor);
    const Rational lead_coeff = divisor.terms_.rbegin()->second;
    Poly2 remainder = *this;
    Poly2 quotient;
    while (!remainder.is_zero()) {
        const auto lead_r = leading(remainder);
        if (lead_r.first < lead_d.first || lead_r.second < lead_d.second) {
            throw InexactDivision(divisor.to_string() + " does not divide " + to_string());
        }
        const Poly2 step
            = monomial(remainder.terms_.rbegin()->second / lead_coeff, lead_r.first - lead_d.first, lead_r.second - lead_d.second);
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

namespace {

std::string variable_part(unsigned deg_c, unsigned deg_h)
{
    std::string out;
    auto append = [&out](const char *name, unsigned deg) {
        if (deg == 0) {
            return;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += name;
        if (deg > 1) {
            out += "^" + std::to_string(deg);
        }
    };
    append("c", deg_c);
    append("h", deg_h);
    return out;
}

std::string magnitude_text(const Rational &magnitude)
{
    return magnitude.is_integer() ? magnitude.numerator().get_str() : "(" + magnitude.to_string() + ")";
}

} // namespace

std::string Poly2::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
    // Total degree descending, then degree in c descending.
    std::sort(ordered.begin(), ordered.end(), [](const auto &a, const auto &b) {
        const unsigned da = a.first.first + a.first.second;
        const unsigned db = b.first.first + b.first.second;
        return da != db ? da > db : a.first.first > b.first.first;
    });
    std::string out;
    for (const auto &[e, coeff] : ordered) {
        const bool negative = coeff.sign() < 0;
        const Rational magnitude = abs(coeff);
        const std::string vars = variable_part(e.first, e.second);
        std::string term;
        if (vars.empty()) {
            term = magnitude_text(magnitude);
        } else if (magnitude == Rational(1)) {
            term = vars;
        } else {
            term = magnitude_text(magnitude) + "*" + vars;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " + term : " + " + term;
        }
    }
    return out;
}

std::vector<Rational> rational_roots(const std::vector<Rational> &coeffs)
{
    // Clear denominators, strip zero roots, then test +-d/l for divisors d of
    // the constant term and l of the leading coefficient.
    std::vector<BigInt> ints;
    BigInt lcm_den = 1;
    for (const auto &c : coeffs) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    }
    for (const auto &c : coeffs) {
        ints.push_back(c.numerator() * (lcm_den / c.denominator()));
    }
    while (!ints.empty() && ints.back() == 0) {
        ints.pop_back();
    }
    std::set<Rational> roots;
    std::size_t low = 0;
    while (low < ints.size() && ints[low] == 0) {
        ++low;
    }
    if (ints.empty()) {
        return {};
    }
    if (low > 0) {
        roots.insert(Rational(0));
    }
    const std::vector<BigInt> reduced(ints.begin() + static_cast<std::ptrdiff_t>(low), ints.end());
    if (reduced.size() <= 1) {
        return {roots.begin(), roots.end()};
    }
    auto divisors = [](BigInt n) {
        n = abs(n);
        std::vector<BigInt> out;
        for (BigInt d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        }
        return out;
    };
    auto is_root = [&reduced](const Rational &x) {
        Rational acc;
        for (std::size_t k = reduced.size(); k-- > 0;) {
            acc = acc * x + Rational(reduced[k]);
        }
        return acc.is_zero();
    };
    for (const auto &num : divisors(reduced.front())) {
        for (const auto &den : divisors(reduced.back())) {
            for (const int s : {1, -1}) {
                const Rational candidate(BigInt(s * num), den);
                if (is_root(candidate)) {
                    roots.insert(candidate);
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

} // namespace qcft
