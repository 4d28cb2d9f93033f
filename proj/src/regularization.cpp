#include <qcft/regularization.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <qcft/errors.hpp>
#include <qcft/special_series.hpp>

namespace qcft {

namespace {

void check_progression(long p, long r)
{
    if (p < 1 || r < 1 || r > p) {
        throw InvalidProgression("need p >= 1 and 1 <= r <= p, got (" + std::to_string(p) + ", " + std::to_string(r)
                                 + ")");
    }
}

} // namespace

ArithmeticProgressionSet::ArithmeticProgressionSet(std::vector<Progression> progressions)
    : progressions_(std::move(progressions))
{
    if (progressions_.empty()) {
        throw InvalidProgression("empty progression set");
    }
    for (const auto &pr : progressions_) {
        check_progression(pr.step, pr.start);
    }
    // pn + r and p'm + r' meet iff r = r' mod gcd(p, p') (CRT); both start at
    // their first positive member, so any common residue class is realized.
    for (std::size_t a = 0; a < progressions_.size(); ++a) {
        for (std::size_t b = a + 1; b < progressions_.size(); ++b) {
            const auto &x = progressions_[a];
            const auto &y = progressions_[b];
            if ((x.start - y.start) % std::gcd(x.step, y.step) == 0) {
                throw InvalidProgression("progressions " + std::to_string(x.step) + "n+" + std::to_string(x.start)
                                         + " and " + std::to_string(y.step) + "n+" + std::to_string(y.start)
                                         + " overlap");
            }
        }
    }
}

ArithmeticProgressionSet ArithmeticProgressionSet::parse(const std::string &text)
{
    std::vector<Progression> out;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        const auto colon = group.find(':');
        if (colon == std::string::npos) {
            throw InvalidProgression("expected 'p:r1,r2,...', got '" + group + "'");
        }
        long step = 0;
        try {
            step = std::stol(group.substr(0, colon));
            std::stringstream starts(group.substr(colon + 1));
            std::string item;
            while (std::getline(starts, item, ',')) {
                out.push_back({step, std::stol(item)});
            }
        } catch (const std::logic_error &) {
            throw InvalidProgression("malformed progression list '" + group + "'");
        }
    }
    return ArithmeticProgressionSet(std::move(out));
}

std::vector<long> ArithmeticProgressionSet::members_below(long limit) const
{
    std::vector<long> out;
    for (const auto &pr : progressions_) {
        for (long v = pr.start; v < limit; v += pr.step) {
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ArithmeticProgressionSet::to_string() const
{
    std::string out;
    for (const auto &pr : progressions_) {
        if (!out.empty()) {
            out += ",";
        }
        out += std::to_string(pr.step) + "n+" + std::to_string(pr.start);
    }
    return "{" + out + "}";
}

std::string to_string(RegularizationMethod method)
{
    return method == RegularizationMethod::Hurwitz ? "Hurwitz" : "RamanujanNaive";
}

RegularizedValue hurwitz_sum(long p, long r)
{
    check_progression(p, r);
    return {Rational(r * (p - r), 2 * p) - Rational(p, 12), RegularizationMethod::Hurwitz};
}

RegularizedValue ramanujan_naive_sum(long p, long r)
{
    check_progression(p, r);
    return {Rational(-p, 12) + Rational(r, 2), RegularizationMethod::RamanujanNaive};
}

Rational casimir_exponent(const ArithmeticProgressionSet &s)
{
    Rational total;
    for (const auto &pr : s.progressions()) {
        total += hurwitz_sum(pr.step, pr.start).value;
    }
    return total / Rational(2);
}

namespace {

FracQSeries oscillator_series(const ArithmeticProgressionSet &s, std::size_t order, int sign)
{
    if (order == 0) {
        throw std::invalid_argument("oscillator series: order must be at least 1");
    }
    std::vector<BigInt> c(order);
    c[0] = 1;
    for (const long e : s.members_below(static_cast<long>(order))) {
        detail::divide_binomial(c, static_cast<std::size_t>(e), sign);
    }
    return FracQSeries::from_bigints(casimir_exponent(s), c);
}

} // namespace

FracQSeries oscillator_partition_series(const ArithmeticProgressionSet &s, std::size_t order)
{
    return oscillator_series(s, order, -1);
}

FracQSeries twisted_oscillator_series(const ArithmeticProgressionSet &s, std::size_t order)
{
    return oscillator_series(s, order, +1);
}

CriticalDimension critical_dimension()
{
    // Each transverse oscillator tower contributes (1/2) * sum n = -1/24;
    // level matching 1 + d_t * (-1/24) = 0 fixes d_t.
    const Rational per_direction = hurwitz_sum(1, 1).value / Rational(2);
    const Rational transverse = Rational(-1) / per_direction;
    return {transverse, transverse * per_direction, transverse.to_long() + 2};
}

} // namespace qcft
