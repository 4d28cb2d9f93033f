#include <qcft/virasoro.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include <qcft/errors.hpp>
#include <qcft/partitions.hpp>
#include <qcft/special_series.hpp>

namespace qcft {

Bracket bracket(long m, long n)
{
    Bracket b;
    b.linear = n - m;
    if (m + n == 0) {
        b.central = Rational(n * n * n - n, 12);
    }
    return b;
}

void MinimalModelLabel::validate() const
{
    if (!(1 < p && p < q) || std::gcd(p, q) != 1) {
        throw InvalidLabel("(" + std::to_string(p) + "," + std::to_string(q) + ") needs coprime 1 < p < q");
    }
}

Rational central_charge(const MinimalModelLabel &m)
{
    m.validate();
    return Rational(1) - Rational(6 * (m.p - m.q) * (m.p - m.q), m.p * m.q);
}

Rational effective_central_charge(const MinimalModelLabel &m)
{
    m.validate();
    return Rational(1) - Rational(6, m.p * m.q);
}

Rational kac_weight(const MinimalModelLabel &m, long r, long s)
{
    m.validate();
    const long a = m.q * r - m.p * s;
    const long b = m.q - m.p;
    return Rational(a * a - b * b, 4 * m.p * m.q);
}

CeffScan minimize_effective_central_charge(long bound, bool include_trivial)
{
    CeffScan scan;
    bool first = true;
    for (long p = 2; p * (p + 1) <= bound; ++p) {
        for (long q = p + 1; p * q <= bound; ++q) {
            if (std::gcd(p, q) != 1 || (!include_trivial && p == 2 && q == 3)) {
                continue;
            }
            ++scan.labels_scanned;
            const MinimalModelLabel label{p, q};
            const Rational value = effective_central_charge(label);
            if (first || value < scan.minimum) {
                scan.minimizer = label;
                scan.minimum = value;
                scan.unique = true;
                first = false;
            } else if (value == scan.minimum) {
                scan.unique = false;
            }
        }
    }
    if (first) {
        throw InvalidLabel("no minimal-model label with p q <= " + std::to_string(bound));
    }
    return scan;
}

namespace {

void partitions_into(unsigned remaining, unsigned max_part, unsigned min_part, VirasoroMonomial &current,
                     std::vector<VirasoroMonomial> &out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (unsigned part = std::min(max_part, remaining); part >= min_part; --part) {
        current.push_back(part);
        partitions_into(remaining - part, part, min_part, current, out);
        current.pop_back();
    }
}

// Memoized rewriting of <h| L_{w_0} ... L_{w_{k-1}} |h>: L_{-n}|h> = 0 and
// <h|L_n = 0 for n > 0, L_0|h> = h|h>; otherwise commute the rightmost
// non-positive mode one step to the right.
class ExpectationEngine {
public:
    explicit ExpectationEngine(bool vacuum) : vacuum_(vacuum) {}

    Poly2 evaluate(const std::vector<long> &word)
    {
        if (word.empty()) {
            return Poly2(1);
        }
        if (std::accumulate(word.begin(), word.end(), 0L) != 0) {
            return {};
        }
        if (word.back() < 0 || word.front() > 0) {
            return {};
        }
        if (const auto it = memo_.find(word); it != memo_.end()) {
            return it->second;
        }
        Poly2 result;
        if (word.back() == 0) {
            const std::vector<long> rest(word.begin(), word.end() - 1);
            result = vacuum_ ? Poly2() : Poly2::h() * evaluate(rest);
        } else {
            // word.front() <= 0 guarantees a non-positive mode exists.
            std::size_t i = word.size() - 1;
            while (word[i] > 0) {
                --i;
            }
            std::vector<long> swapped = word;
            std::swap(swapped[i], swapped[i + 1]);
            result = evaluate(swapped);

            const Bracket b = bracket(word[i], word[i + 1]);
            std::vector<long> reduced(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
            reduced.insert(reduced.end(), word.begin() + static_cast<std::ptrdiff_t>(i) + 2, word.end());
            if (!b.central.is_zero()) {
                result += Poly2::monomial(b.central, 1, 0) * evaluate(reduced);
            }
            if (b.linear != 0) {
                reduced.insert(reduced.begin() + static_cast<std::ptrdiff_t>(i), word[i] + word[i + 1]);
                result += Poly2(b.linear) * evaluate(reduced);
            }
        }
        memo_.emplace(word, result);
        return result;
    }

private:
    bool vacuum_;
    std::map<std::vector<long>, Poly2> memo_;
};

} // namespace

std::vector<VirasoroMonomial> verma_basis(unsigned level, bool vacuum)
{
    std::vector<VirasoroMonomial> out;
    VirasoroMonomial current;
    partitions_into(level, level, vacuum ? 2 : 1, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

Poly2 vacuum_expectation(const std::vector<long> &word, bool vacuum)
{
    return ExpectationEngine(vacuum).evaluate(word);
}

VermaGram gram_matrix(unsigned level, bool vacuum)
{
    if (level < 1 || level > max_gram_level) {
        throw LevelTooLarge("level " + std::to_string(level) + " outside [1, " + std::to_string(max_gram_level) + "]");
    }
    VermaGram gram{level, vacuum, verma_basis(level, vacuum), {}};
    ExpectationEngine engine(vacuum);
    const std::size_t dim = gram.basis.size();
    gram.entries.assign(dim, std::vector<Poly2>(dim));
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = a; b < dim; ++b) {
            // (L_{a_1}...L_{a_k}|h>)^dagger = <h| L_{-a_k} ... L_{-a_1}
            std::vector<long> word;
            for (auto it = gram.basis[a].rbegin(); it != gram.basis[a].rend(); ++it) {
                word.push_back(-static_cast<long>(*it));
            }
            for (const auto mode : gram.basis[b]) {
                word.push_back(static_cast<long>(mode));
            }
            gram.entries[a][b] = engine.evaluate(word);
            gram.entries[b][a] = gram.entries[a][b];
        }
    }
    return gram;
}

Poly2 determinant(const std::vector<std::vector<Poly2>> &matrix)
{
    const std::size_t n = matrix.size();
    if (n == 0) {
        return Poly2(1);
    }
    auto m = matrix;
    Poly2 previous(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) {
                ++swap_row;
            }
            if (swap_row == n) {
                return {};
            }
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(previous);
            }
        }
        previous = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Rational determinant_at(const VermaGram &gram, const Rational &c, const Rational &h)
{
    const std::size_t n = gram.entries.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = gram.entries[i][j].evaluate(c, h);
        }
    }
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return Rational(0);
        }
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational factor = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) {
                m[i][j] -= factor * m[k][j];
            }
        }
    }
    return det;
}

NullVectorReport null_vector_central_charges()
{
    const auto gram = gram_matrix(4, true);
    NullVectorReport report;
    report.determinant = determinant(gram.entries);
    for (const auto &root : rational_roots(report.determinant.univariate_in_c(Rational(0)))) {
        if (!root.is_zero()) {
            report.central_charges.push_back(root);
        }
    }
    if (report.central_charges.size() == 1) {
        // Basis order is {L_2 L_2, L_4}; the kernel of the 2x2 Gram at the root.
        const Rational c = report.central_charges.front();
        report.beta = -gram.entries[0][0].evaluate(c, Rational(0)) / gram.entries[0][1].evaluate(c, Rational(0));
        report.d2t_coefficient = -report.beta / Rational(2);
    }
    return report;
}

FracQSeries character_25(Sector25 sector, std::size_t order)
{
    if (order == 0) {
        throw std::invalid_argument("character_25: order must be at least 1");
    }
    const MinimalModelLabel label{2, 5};
    const Rational c = central_charge(label);
    PartitionConstraint rule;
    rule.min_gap = 2;
    Rational lowest_weight;
    if (sector == Sector25::V0) {
        rule.min_part = 2;
    } else {
        lowest_weight = kac_weight(label, 1, 2);
    }
    const auto counts = count_partitions(order - 1, rule);
    return FracQSeries::from_bigints(lowest_weight - c / Rational(24), counts.values);
}

namespace {

Complex evaluate_numeric(const FracQSeries &f, Complex tau)
{
    const Complex q = nome(tau);
    Complex sum = 0.0;
    for (std::size_t n = f.order(); n-- > 0;) {
        sum = sum * q + f[n].to_double();
    }
    return std::exp(Complex(0.0, 2.0 * pi * f.prefactor().to_double()) * tau) * sum;
}

} // namespace

double torus_partition_function_25(Complex tau, std::size_t order)
{
    require_upper_half_plane(tau, "torus_partition_function_25");
    const auto chi0 = character_25(Sector25::V0, order);
    const auto chi15 = character_25(Sector25::Vm15, order);
    // The last stored term bounds the tail: coefficients grow subexponentially.
    const double abs_q = std::abs(nome(tau));
    const double last = std::max(chi0[order - 1].to_double(), chi15[order - 1].to_double())
        * std::pow(abs_q, static_cast<double>(order - 1));
    if (last > 1e-12) {
        throw TruncationTooShort("order " + std::to_string(order) + " leaves a tail term of "
                                 + format_decimal(last) + " at Im tau = " + format_short(tau.imag()));
    }
    return std::norm(evaluate_numeric(chi15, tau)) + std::norm(evaluate_numeric(chi0, tau));
}

FracQSeries serre_derivative(const FracQSeries &f, const Rational &k, std::size_t order)
{
    const auto e2 = eisenstein(2, order);
    return sub(q_derivative(f), scale(mul(e2, f), k / Rational(12)));
}

FracQSeries ode_residual(Sector25 sector, std::size_t order, const Rational &coefficient)
{
    if (order < 2) {
        throw std::invalid_argument("ode_residual: order must be at least 2");
    }
    const auto z = character_25(sector, order);
    const auto lhs = serre_derivative(q_derivative(z), Rational(2), order);
    const auto rhs = scale(mul(eisenstein(4, order), z), coefficient);
    return sub(lhs, rhs);
}

double scale_anomaly(const Rational &c, long genus, double lambda)
{
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("scale_anomaly: lambda must be positive");
    }
    const Rational exponent = c * Rational(1 - genus) / Rational(6);
    if (exponent.is_zero()) {
        return 1.0;
    }
    return std::pow(lambda, exponent.to_double());
}

} // namespace qcft
