#include <qcft/rational.hpp>

#include <cctype>
#include <stdexcept>

#include <qcft/errors.hpp>

namespace qcft {

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (const char ch : s) {
        if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text.front() == '-') {
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    }
    const BigInt den(std::string(den_text), 10);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(BigInt(std::string(num_text), 10), den);
}

long Rational::to_long() const
{
    if (!is_integer() || !value_.get_num().fits_slong_p()) {
        throw std::domain_error("Rational::to_long: " + to_string() + " is not a machine integer");
    }
    return value_.get_num().get_si();
}

std::string Rational::to_string() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_string();
}

Rational abs(const Rational &r)
{
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational &base, unsigned exponent)
{
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

} // namespace qcft
