#include <doctest.h>

#include <cmath>

#include <qcft/errors.hpp>
#include <qcft/partitions.hpp>
#include <qcft/special_series.hpp>

#include "oracles.hpp"

using qcft::PartitionConstraint;
using qcft::Rational;

namespace {

PartitionConstraint gap_rule(unsigned min_part, unsigned min_gap)
{
    PartitionConstraint c;
    c.min_part = min_part;
    c.min_gap = min_gap;
    return c;
}

PartitionConstraint residue_rule(unsigned modulus, std::set<unsigned> residues)
{
    PartitionConstraint c;
    c.allowed_residues = qcft::ResidueSet{modulus, std::move(residues)};
    return c;
}

bool gaps_at_least(const std::vector<unsigned> &parts, unsigned min_part, unsigned gap)
{
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j] < min_part) {
            return false;
        }
        if (j + 1 < parts.size() && parts[j] - parts[j + 1] < gap) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("small gap-restricted counts")
{
    const auto a = qcft::count_partitions(4, gap_rule(2, 2));
    const auto b = qcft::count_partitions(4, gap_rule(1, 2));
    CHECK(a.values[4] == 1);
    CHECK(b.values[4] == 2);
    CHECK(a.values[0] == 1);
    CHECK(qcft::count_partitions(0, residue_rule(5, {1, 4})).values[0] == 1);
}

TEST_CASE("unrestricted partition numbers")
{
    const auto p = qcft::unrestricted_p(100);
    CHECK(p.values[0] == 1);
    CHECK(p.values[1] == 1);
    CHECK(p.values[4] == 5);
    CHECK(p.values[100] == qcft::BigInt("190569292"));
    for (unsigned n = 0; n <= 30; ++n) {
        CHECK(p.values[n] == oracle::count_if_partitions(n, [](const auto &) { return true; }));
    }
}

TEST_CASE("brute-force oracle agrees with the library on every suite constraint")
{
    struct Case {
        PartitionConstraint constraint;
        std::function<bool(const std::vector<unsigned> &)> pred;
    };
    std::vector<Case> cases{
        {gap_rule(1, 2), [](const auto &p) { return gaps_at_least(p, 1, 2); }},
        {gap_rule(2, 2), [](const auto &p) { return gaps_at_least(p, 2, 2); }},
        {gap_rule(1, 3), [](const auto &p) { return gaps_at_least(p, 1, 3); }},
        {residue_rule(5, {1, 4}),
         [](const auto &p) { return std::all_of(p.begin(), p.end(), [](unsigned x) { return x % 5 == 1 || x % 5 == 4; }); }},
        {residue_rule(7, {1, 2, 5, 6}),
         [](const auto &p) { return std::all_of(p.begin(), p.end(), [](unsigned x) { return x % 7 != 0 && x % 7 != 3 && x % 7 != 4; }); }},
    };
    PartitionConstraint window;
    window.window = qcft::Window{3, 2};
    window.max_ones = 1;
    cases.push_back({window, [](const std::vector<unsigned> &p) {
                         if (std::count(p.begin(), p.end(), 1u) > 1) {
                             return false;
                         }
                         for (std::size_t j = 0; j + 2 < p.size(); ++j) {
                             if (p[j] - p[j + 2] < 2) {
                                 return false;
                             }
                         }
                         return true;
                     }});
    for (const auto &c : cases) {
        const auto table = qcft::count_partitions(32, c.constraint);
        for (unsigned n = 0; n <= 32; ++n) {
            CHECK(table.values[n] == oracle::count_if_partitions(n, c.pred));
        }
    }
}

TEST_CASE("enumeration and dynamic programming agree through n = 60")
{
    std::vector<PartitionConstraint> constraints{gap_rule(1, 2), gap_rule(2, 2), residue_rule(5, {1, 4}),
                                                 residue_rule(5, {2, 3})};
    for (unsigned k = 2; k <= 4; ++k) {
        for (unsigned i = 1; i <= k; ++i) {
            PartitionConstraint w;
            w.window = qcft::Window{k, 2};
            w.max_ones = i - 1;
            constraints.push_back(w);
        }
    }
    for (const auto &c : constraints) {
        const auto e = qcft::enumerate_partitions(60, c);
        const auto d = qcft::count_partitions_dp(60, c);
        CHECK(e.values == d.values);
    }
}

TEST_CASE("sum and product sides of Rogers-Ramanujan through n = 200")
{
    const std::size_t n = 200;
    const auto g = qcft::rr_product(qcft::RRProduct::G, n + 1);
    const auto h = qcft::rr_product(qcft::RRProduct::H, n + 1);
    const auto g_gap = qcft::count_partitions(n, gap_rule(1, 2));
    const auto h_gap = qcft::count_partitions(n, gap_rule(2, 2));
    const auto g_res = qcft::count_partitions(n, residue_rule(5, {1, 4}));
    const auto h_res = qcft::count_partitions(n, residue_rule(5, {2, 3}));
    for (std::size_t k = 0; k <= n; ++k) {
        CHECK(g[k] == Rational(g_gap.values[k]));
        CHECK(g[k] == Rational(g_res.values[k]));
        CHECK(h[k] == Rational(h_gap.values[k]));
        CHECK(h[k] == Rational(h_res.values[k]));
    }
}

TEST_CASE("Andrews-Gordon by double enumeration")
{
    CHECK(qcft::gordon_check(2, 2, 40).pass);
    CHECK(qcft::gordon_check(2, 1, 40).pass);
    CHECK(qcft::gordon_check(3, 3, 40).pass);
    for (unsigned k = 2; k <= 4; ++k) {
        for (unsigned i = 1; i <= k; ++i) {
            const auto r = qcft::gordon_check(k, i, 60);
            CHECK(r.pass);
            CHECK(!r.counterexample);
            CHECK(r.window_side.size() == 61);
        }
    }
    CHECK_THROWS(qcft::gordon_check(2, 3, 20));
    CHECK_THROWS(qcft::gordon_check(2, 1, 61));
}

TEST_CASE("window and gap rules cannot be combined")
{
    auto c = gap_rule(1, 2);
    c.window = qcft::Window{2, 2};
    CHECK_THROWS_AS(c.validate(), qcft::ConflictingConstraint);
}

TEST_CASE("growth probe")
{
    const auto small = qcft::growth_probe(100);
    const auto mid = qcft::growth_probe(1000);
    const auto large = qcft::growth_probe(5000);
    CHECK(small.log_p == doctest::Approx(std::log(190569292.0)).epsilon(1e-14));
    CHECK(small.bound == doctest::Approx(qcft::pi * std::sqrt(200.0 / 3.0)).epsilon(1e-14));
    // log p(n) / (pi sqrt(2n/3)) approaches 1 slowly from below.
    CHECK(small.ratio() == doctest::Approx(0.74327).epsilon(1e-4));
    CHECK(mid.ratio() == doctest::Approx(0.89076).epsilon(1e-4));
    CHECK(small.ratio() < mid.ratio());
    CHECK(mid.ratio() < large.ratio());
    CHECK(large.ratio() < 1.0);
    CHECK(1.0 - large.ratio() < 1.0 - small.ratio());
    CHECK_THROWS(qcft::growth_probe(99));
    CHECK_THROWS(qcft::growth_probe(5001));
}
