#pragma once

#include <stdexcept>
#include <string>

namespace qcft {

// Root of every error raised by the library. Each named failure mode gets
// its own type so callers (and the CLI) can dispatch on it.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QCFT_DEFINE_ERROR(Name)                                               \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {}  \
    }

// series-core
QCFT_DEFINE_ERROR(NonAlignablePrefactor);
QCFT_DEFINE_ERROR(NonUnitLeadingCoefficient);
QCFT_DEFINE_ERROR(ExponentOutOfRange);

// numeric evaluation
QCFT_DEFINE_ERROR(NotInUpperHalfPlane);
QCFT_DEFINE_ERROR(NonpositiveRadius);
QCFT_DEFINE_ERROR(ThetaConstantVanishes);
QCFT_DEFINE_ERROR(ThetaZeroDivision);
QCFT_DEFINE_ERROR(TruncationTooShort);

// partitions
QCFT_DEFINE_ERROR(ConflictingConstraint);
QCFT_DEFINE_ERROR(OracleMismatch);

// regularization
QCFT_DEFINE_ERROR(InvalidProgression);

// virasoro
QCFT_DEFINE_ERROR(LevelTooLarge);
QCFT_DEFINE_ERROR(InvalidLabel);
QCFT_DEFINE_ERROR(InexactDivision);

// mock-modular
QCFT_DEFINE_ERROR(ZDependenceDetected);
QCFT_DEFINE_ERROR(RoundingUnstable);

// cli / persistence
QCFT_DEFINE_ERROR(ConfigParse);
QCFT_DEFINE_ERROR(GoldenMismatch);
QCFT_DEFINE_ERROR(ParseError);

#undef QCFT_DEFINE_ERROR

} // namespace qcft
