#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <qcft/rational.hpp>

namespace qcft {

struct ResidueSet {
    unsigned modulus = 1;
    std::set<unsigned> residues;  // subset of Z/modulus

    bool contains(unsigned part) const { return residues.count(part % modulus) != 0; }
};

// Window rule on the weakly decreasing parts b_1 >= b_2 >= ...:
// b_j - b_{j+k-1} >= gap for every j.
struct Window {
    unsigned k = 2;
    unsigned gap = 2;
};

struct PartitionConstraint {
    unsigned min_part = 1;
    unsigned min_gap = 0;   // consecutive parts differ by at least this much
    std::optional<ResidueSet> allowed_residues;
    std::optional<Window> window;
    std::optional<unsigned> max_ones;  // at most this many parts equal to 1

    // Throws ConflictingConstraint on an inconsistent combination.
    void validate() const;
    bool allows_part(unsigned part) const;
};

// values[n] counts the partitions of n; values[0] = 1.
struct CountTable {
    std::vector<BigInt> values;
};

inline constexpr std::size_t enumeration_limit = 60;

// Backtracking enumeration (n_max <= enumeration_limit).
CountTable enumerate_partitions(std::size_t n_max, const PartitionConstraint &c);
// Generating-function / dynamic-programming route, any n_max.
CountTable count_partitions_dp(std::size_t n_max, const PartitionConstraint &c);
// Enumeration up to min(n_max, 60) cross-checked against the DP route, which
// alone covers the rest. Throws OracleMismatch if the two ever disagree.
CountTable count_partitions(std::size_t n_max, const PartitionConstraint &c);

// p(n) by Euler's pentagonal recurrence.
CountTable unrestricted_p(std::size_t n_max);

struct GordonReport {
    unsigned k = 0;
    unsigned i = 0;
    std::size_t n_max = 0;
    bool pass = true;
    std::optional<std::size_t> counterexample;  // first failing n
    std::vector<BigInt> window_side;
    std::vector<BigInt> residue_side;
};

// Andrews-Gordon: partitions with b_j - b_{j+k-1} >= 2 and at most i-1 ones
// are equinumerous with partitions into parts not congruent to 0, +-i mod 2k+1.
// Both sides by independent enumeration.
GordonReport gordon_check(unsigned k, unsigned i, std::size_t n_max);

struct GrowthProbe {
    std::size_t n = 0;
    double log_p = 0.0;   // log p(n)
    double bound = 0.0;   // pi * sqrt(2n/3)
    double ratio() const { return log_p / bound; }
};

GrowthProbe growth_probe(std::size_t n);

// Natural log of a positive big integer to double precision.
double log_bigint(const BigInt &value);

} // namespace qcft
