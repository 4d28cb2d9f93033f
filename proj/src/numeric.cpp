#include <qcft/numeric.hpp>

#include <charconv>
#include <cstdio>
#include <string>

#include <qcft/errors.hpp>

namespace qcft {

void require_upper_half_plane(Complex tau, const char *where)
{
    if (!(tau.imag() > 0.0)) {
        throw NotInUpperHalfPlane(std::string(where) + ": Im tau = " + format_short(tau.imag()) + " is not positive");
    }
}

Complex nome(Complex tau)
{
    require_upper_half_plane(tau, "nome");
    return std::exp(Complex(0.0, 2.0 * pi) * tau);
}

std::string format_decimal(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_short(double value)
{
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

} // namespace qcft
