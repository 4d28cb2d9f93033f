#include <qcft/partitions.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include <qcft/errors.hpp>
#include <qcft/numeric.hpp>

namespace qcft {

void PartitionConstraint::validate() const
{
    if (min_part == 0) {
        throw ConflictingConstraint("min_part must be at least 1");
    }
    if (min_gap > 0 && window) {
        throw ConflictingConstraint("min_gap and window cannot both be active");
    }
    if (window && (window->k < 2 || window->gap == 0)) {
        throw ConflictingConstraint("window needs k >= 2 and gap >= 1");
    }
    if (allowed_residues) {
        if (allowed_residues->modulus == 0) {
            throw ConflictingConstraint("residue modulus must be positive");
        }
        for (const auto r : allowed_residues->residues) {
            if (r >= allowed_residues->modulus) {
                throw ConflictingConstraint("residue " + std::to_string(r) + " outside Z/"
                                            + std::to_string(allowed_residues->modulus));
            }
        }
    }
}

bool PartitionConstraint::allows_part(unsigned part) const
{
    if (part < min_part) {
        return false;
    }
    if (part == 1 && max_ones && *max_ones == 0) {
        return false;
    }
    return !allowed_residues || allowed_residues->contains(part);
}

namespace {

// Depth-first walk over weakly decreasing part lists. Every node is a
// complete partition of its running sum, so one walk fills the whole table.
class Enumerator {
public:
    Enumerator(std::size_t n_max, const PartitionConstraint &c) : n_max_(n_max), c_(c), counts_(n_max + 1, 0) {}

    std::vector<unsigned long> run()
    {
        counts_[0] = 1;
        for (unsigned first = 1; first <= n_max_; ++first) {
            if (c_.allows_part(first)) {
                parts_.push_back(first);
                visit(first);
                parts_.pop_back();
            }
        }
        return counts_;
    }

private:
    bool admissible_next(unsigned next) const
    {
        if (!c_.allows_part(next)) {
            return false;
        }
        const unsigned prev = parts_.back();
        if (prev - next < c_.min_gap) {
            return false;
        }
        if (next == 1 && c_.max_ones && ones_ + 1 > *c_.max_ones) {
            return false;
        }
        if (c_.window) {
            const std::size_t k = c_.window->k;
            // The new part sits at 1-indexed position m = size+1; it closes
            // the window starting at position m-k+1.
            if (parts_.size() + 1 >= k) {
                const unsigned head = parts_[parts_.size() + 1 - k];
                if (head - next < c_.window->gap) {
                    return false;
                }
            }
        }
        return true;
    }

    void visit(std::size_t sum)
    {
        if (parts_.back() == 1) {
            ++ones_;
        }
        ++counts_[sum];
        const unsigned prev = parts_.back();
        for (unsigned next = prev; next >= 1; --next) {
            if (sum + next > n_max_ || !admissible_next(next)) {
                continue;
            }
            parts_.push_back(next);
            visit(sum + next);
            parts_.pop_back();
        }
        if (parts_.back() == 1) {
            --ones_;
        }
    }

    std::size_t n_max_;
    const PartitionConstraint &c_;
    std::vector<unsigned long> counts_;
    std::vector<unsigned> parts_;
    unsigned ones_ = 0;
};

// Gap rule, smallest part first: f(n, lo) counts partitions of n with all
// parts >= lo. Parts at least min_gap apart; with min_gap == 0 repeats allowed.
CountTable dp_gap(std::size_t n_max, const PartitionConstraint &c)
{
    const std::size_t g = c.min_gap;
    const std::size_t width = n_max + g + 2;
    // f[n][lo], lo in [1, n_max + g + 1]
    std::vector<std::vector<BigInt>> f(n_max + 1, std::vector<BigInt>(width));
    for (std::size_t lo = 0; lo < width; ++lo) {
        f[0][lo] = 1;
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t lo = n_max + g + 1; lo >= 1; --lo) {
            BigInt total = lo + 1 < width ? f[n][lo + 1] : BigInt(0);  // smallest part > lo
            if (lo <= n && c.allows_part(static_cast<unsigned>(lo))) {
                const std::size_t next_lo = g == 0 ? lo : lo + g;
                total += f[n - lo][std::min(next_lo, width - 1)];
            }
            f[n][lo] = total;
        }
    }
    CountTable table{std::vector<BigInt>(n_max + 1)};
    for (std::size_t n = 0; n <= n_max; ++n) {
        table.values[n] = f[n][1];
    }
    return table;
}

// Repeats allowed with a bound on ones: choose the number of ones, then the
// rest from parts >= 2.
CountTable dp_bounded_ones(std::size_t n_max, const PartitionConstraint &c)
{
    PartitionConstraint no_ones = c;
    no_ones.max_ones.reset();
    no_ones.min_part = std::max(2U, c.min_part);
    const auto rest = dp_gap(n_max, no_ones);
    const std::size_t max_ones = c.allows_part(1) ? *c.max_ones : 0;
    CountTable table{std::vector<BigInt>(n_max + 1)};
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t j = 0; j <= std::min(max_ones, n); ++j) {
            table.values[n] += rest.values[n - j];
        }
    }
    return table;
}

// Window rule in multiplicity form: b_j - b_{j+k-1} >= d holds iff every run
// of d consecutive integers carries total multiplicity <= k-1. Parts are
// processed in increasing value with the last d-1 multiplicities as state.
class WindowDP {
public:
    WindowDP(std::size_t n_max, const PartitionConstraint &c) : n_max_(n_max), c_(c) {}

    CountTable run()
    {
        CountTable table{std::vector<BigInt>(n_max_ + 1)};
        const std::vector<unsigned> empty_history(c_.window->gap - 1, 0);
        for (std::size_t n = 0; n <= n_max_; ++n) {
            table.values[n] = count(1, n, empty_history);
        }
        return table;
    }

private:
    BigInt count(std::size_t part, std::size_t remaining, const std::vector<unsigned> &history)
    {
        if (remaining == 0) {
            return 1;
        }
        if (part > remaining) {
            return 0;
        }
        auto key = std::make_tuple(part, remaining, history);
        if (const auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        unsigned used = 0;
        for (const auto h : history) {
            used += h;
        }
        const unsigned cap = c_.window->k - 1;
        unsigned max_mult = c_.allows_part(static_cast<unsigned>(part)) ? cap - std::min(cap, used) : 0;
        if (part == 1 && c_.max_ones) {
            max_mult = std::min(max_mult, *c_.max_ones);
        }
        BigInt total;
        // Slide the window: drop the oldest multiplicity, append this one.
        std::vector<unsigned> next_history = history;
        for (unsigned mult = 0; mult <= max_mult && mult * part <= remaining; ++mult) {
            if (!next_history.empty()) {
                std::rotate(next_history.begin(), next_history.begin() + 1, next_history.end());
                next_history.back() = mult;
            }
            total += count(part + 1, remaining - mult * part, next_history);
            next_history = history;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    std::size_t n_max_;
    const PartitionConstraint &c_;
    std::map<std::tuple<std::size_t, std::size_t, std::vector<unsigned>>, BigInt> memo_;
};

} // namespace

CountTable enumerate_partitions(std::size_t n_max, const PartitionConstraint &c)
{
    c.validate();
    if (n_max > enumeration_limit) {
        throw std::invalid_argument("enumerate_partitions: n_max above the enumeration limit of "
                                    + std::to_string(enumeration_limit));
    }
    const auto counts = Enumerator(n_max, c).run();
    CountTable table{std::vector<BigInt>(n_max + 1)};
    for (std::size_t n = 0; n <= n_max; ++n) {
        table.values[n] = counts[n];
    }
    return table;
}

CountTable count_partitions_dp(std::size_t n_max, const PartitionConstraint &c)
{
    c.validate();
    if (c.window) {
        return WindowDP(n_max, c).run();
    }
    if (c.max_ones && c.min_gap == 0) {
        return dp_bounded_ones(n_max, c);
    }
    return dp_gap(n_max, c);
}

CountTable count_partitions(std::size_t n_max, const PartitionConstraint &c)
{
    auto table = count_partitions_dp(n_max, c);
    const auto oracle = enumerate_partitions(std::min(n_max, enumeration_limit), c);
    for (std::size_t n = 0; n < oracle.values.size(); ++n) {
        if (oracle.values[n] != table.values[n]) {
            throw OracleMismatch("partition count at n = " + std::to_string(n) + ": enumeration "
                                 + oracle.values[n].get_str() + " vs recurrence " + table.values[n].get_str());
        }
    }
    return table;
}

CountTable unrestricted_p(std::size_t n_max)
{
    CountTable table{std::vector<BigInt>(n_max + 1)};
    table.values[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigInt acc;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            if (static_cast<std::size_t>(g1) > n) {
                break;
            }
            const long g2 = k * (3 * k + 1) / 2;
            const bool plus = (k % 2) == 1;
            const BigInt term = table.values[n - static_cast<std::size_t>(g1)]
                + (static_cast<std::size_t>(g2) <= n ? table.values[n - static_cast<std::size_t>(g2)] : BigInt(0));
            if (plus) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        table.values[n] = acc;
    }
    return table;
}

GordonReport gordon_check(unsigned k, unsigned i, std::size_t n_max)
{
    if (k < 2 || i < 1 || i > k) {
        throw std::invalid_argument("gordon_check: need 2 <= k and 1 <= i <= k");
    }
    PartitionConstraint window_side;
    window_side.window = Window{k, 2};
    window_side.max_ones = i - 1;

    const unsigned m = 2 * k + 1;
    ResidueSet residues{m, {}};
    for (unsigned r = 1; r < m; ++r) {
        if (r != i && r != m - i) {
            residues.residues.insert(r);
        }
    }
    PartitionConstraint residue_side;
    residue_side.allowed_residues = residues;

    GordonReport report{k, i, n_max, true, std::nullopt,
                        enumerate_partitions(n_max, window_side).values,
                        enumerate_partitions(n_max, residue_side).values};
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (report.window_side[n] != report.residue_side[n]) {
            report.pass = false;
            report.counterexample = n;
            break;
        }
    }
    return report;
}

double log_bigint(const BigInt &value)
{
    if (sgn(value) <= 0) {
        throw std::domain_error("log_bigint: argument must be positive");
    }
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

GrowthProbe growth_probe(std::size_t n)
{
    if (n < 100 || n > 5000) {
        throw std::invalid_argument("growth_probe: n must lie in [100, 5000]");
    }
    const auto p = unrestricted_p(n);
    return {n, log_bigint(p.values[n]), pi * std::sqrt(2.0 * static_cast<double>(n) / 3.0)};
}

} // namespace qcft
