#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <qcft/rational.hpp>
#include <qcft/series.hpp>

namespace qcft {

// {step * n + start : n >= 0} with 0 < start <= step.
struct Progression {
    long step = 1;
    long start = 1;
};

// Finite union of pairwise disjoint progressions: the spectrum of a tower of
// oscillators.
class ArithmeticProgressionSet {
public:
    // Throws InvalidProgression on a bad progression or an overlap.
    explicit ArithmeticProgressionSet(std::vector<Progression> progressions);

    // Parses "p:r1,r2,..." e.g. "5:1,4", several groups separated by ';'.
    static ArithmeticProgressionSet parse(const std::string &text);

    const std::vector<Progression> &progressions() const { return progressions_; }
    // Members below `limit`, ascending.
    std::vector<long> members_below(long limit) const;
    std::string to_string() const;

private:
    std::vector<Progression> progressions_;
};

enum class RegularizationMethod { Hurwitz, RamanujanNaive };

struct RegularizedValue {
    Rational value;
    RegularizationMethod method = RegularizationMethod::Hurwitz;
};

std::string to_string(RegularizationMethod method);

// sum_{n>=0} (p n + r) := r(p-r)/(2p) - p/12  (Hurwitz zeta at s = -1).
RegularizedValue hurwitz_sum(long p, long r);
// p * sum n + r * sum 1 with sum n = -1/12 and sum_{n>=0} 1 = 1/2.
RegularizedValue ramanujan_naive_sum(long p, long r);

// Half the regularized sum of the spectrum.
Rational casimir_exponent(const ArithmeticProgressionSet &s);

// q^{E_C} prod_{E in s, E < order} (1 - q^E)^{-1}.
FracQSeries oscillator_partition_series(const ArithmeticProgressionSet &s, std::size_t order);
// q^{E_C} prod_{E in s, E < order} (1 + q^E)^{-1}; the untwisted E_C is kept.
FracQSeries twisted_oscillator_series(const ArithmeticProgressionSet &s, std::size_t order);

struct CriticalDimension {
    Rational transverse;     // d_t solving 1 - d_t/24 = 0
    Rational vacuum_energy;  // d_t * (1/2) * zeta(-1) = -d_t/24 at d_t
    long spacetime = 0;      // d_t + 2
};

CriticalDimension critical_dimension();

} // namespace qcft
