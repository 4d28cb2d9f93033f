#pragma once

#include <cstddef>
#include <vector>

#include <qcft/numeric.hpp>
#include <qcft/rational.hpp>
#include <qcft/series.hpp>

namespace qcft {

// values[n] = sigma_k(n) for 1 <= n <= max_n; values[0] is unused and zero.
struct DivisorSumTable {
    unsigned kind = 0;
    std::vector<BigInt> values;
};

DivisorSumTable divisor_sums(unsigned k, std::size_t max_n);

// q^{1/24} prod_{n>=1} (1 - q^n), truncated to `order` coefficients.
FracQSeries dedekind_eta(std::size_t order);

// Normalized Eisenstein series with constant term 1, k in {2, 4, 6}:
//   E2 = 1 - 24 sum sigma_1(n) q^n
//   E4 = 1 + 240 sum sigma_3(n) q^n
//   E6 = 1 - 504 sum sigma_5(n) q^n
FracQSeries eisenstein(unsigned k, std::size_t order);

enum class RRProduct { G, H };

// G = prod 1/((1-q^{5n+1})(1-q^{5n+4})), H = prod 1/((1-q^{5n+2})(1-q^{5n+3})).
FracQSeries rr_product(RRProduct which, std::size_t order);

// Numeric q^{1/24} prod_{n<=cutoff} (1 - q^n). cutoff == 0 picks the cutoff
// adaptively so the first neglected factor differs from 1 by < 1e-16.
Complex eta_eval(Complex tau, std::size_t cutoff = 0);

// Smallest n with |q|^n below tail_epsilon.
std::size_t adaptive_product_cutoff(double abs_q);

// Helpers on integer coefficient vectors, shared by the series constructors.
namespace detail {

// c <- c * (1 - q^e)  (sign = -1)  or  c * (1 + q^e)  (sign = +1), truncated.
void multiply_binomial(std::vector<BigInt> &c, std::size_t e, int sign);
// c <- c / (1 - q^e)  (sign = -1)  or  c / (1 + q^e)  (sign = +1), truncated.
void divide_binomial(std::vector<BigInt> &c, std::size_t e, int sign);

} // namespace detail

} // namespace qcft
