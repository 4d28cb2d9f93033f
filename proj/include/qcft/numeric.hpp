#pragma once

#include <complex>
#include <string>

namespace qcft {

using Complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Terms below this modulus are dropped by adaptive cutoffs.
inline constexpr double tail_epsilon = 1e-16;

// exp(2 pi i tau); throws NotInUpperHalfPlane unless Im tau > 0.
Complex nome(Complex tau);
void require_upper_half_plane(Complex tau, const char *where);

// 17 significant digits, round-trippable.
std::string format_decimal(double value);
// Shortest text that parses back to the same double, for inputs and labels.
std::string format_short(double value);

} // namespace qcft
