#pragma once

#include <cstddef>
#include <vector>

#include <qcft/numeric.hpp>
#include <qcft/polynomial.hpp>
#include <qcft/rational.hpp>
#include <qcft/series.hpp>

namespace qcft {

// Mode convention: positive modes raise the L_0 weight,
//   [L_m, L_n] = (n - m) L_{m+n} + c/12 (n^3 - n) delta_{m+n,0}.
struct Bracket {
    long linear = 0;        // coefficient of L_{m+n}
    Rational central;       // coefficient of c
};

Bracket bracket(long m, long n);

// Coprime 1 < p < q.
struct MinimalModelLabel {
    long p = 2;
    long q = 5;

    void validate() const;  // throws InvalidLabel
};

Rational central_charge(const MinimalModelLabel &m);
Rational effective_central_charge(const MinimalModelLabel &m);
// Kac table weight h_{r,s} = ((q r - p s)^2 - (q - p)^2) / (4 p q).
Rational kac_weight(const MinimalModelLabel &m, long r, long s);

struct CeffScan {
    MinimalModelLabel minimizer;
    Rational minimum;
    bool unique = true;
    std::size_t labels_scanned = 0;
};

// Minimum of c_eff over labels with p q <= bound. The (2,3) model has c = 0
// and a one-dimensional state space (the trivial theory); it is skipped
// unless include_trivial is set, in which case it wins with c_eff = 0.
CeffScan minimize_effective_central_charge(long bound, bool include_trivial = false);

// L_{n_1} ... L_{n_k} |h> with n_1 >= ... >= n_k >= 1.
using VirasoroMonomial = std::vector<unsigned>;

inline constexpr unsigned max_gram_level = 6;

struct VermaGram {
    unsigned level = 0;
    bool vacuum = false;
    std::vector<VirasoroMonomial> basis;
    std::vector<std::vector<Poly2>> entries;
};

// Partitions of `level` (parts >= 2 when vacuum), weakly decreasing,
// lexicographically ascending.
std::vector<VirasoroMonomial> verma_basis(unsigned level, bool vacuum);

// <h| w |h> for a word of modes applied right to left, as a polynomial in
// (c, h); h is set to 0 when vacuum.
Poly2 vacuum_expectation(const std::vector<long> &word, bool vacuum = false);

VermaGram gram_matrix(unsigned level, bool vacuum);

// Fraction-free (Bareiss) determinant with exact polynomial division.
Poly2 determinant(const std::vector<std::vector<Poly2>> &matrix);
// Determinant after specializing (c, h).
Rational determinant_at(const VermaGram &gram, const Rational &c, const Rational &h);

struct NullVectorReport {
    Poly2 determinant;                  // level-4 vacuum Gram determinant
    std::vector<Rational> central_charges;  // nonzero roots in c
    // Null combination (L_2 L_2 + beta L_4)|0> at the root.
    Rational beta;
    // The same relation as L_2L_2|0> = coefficient * d^2T with d^2T = 2 L_4|0>.
    Rational d2t_coefficient;
};

NullVectorReport null_vector_central_charges();

enum class Sector25 { V0, Vm15 };

// Characters of the (2,5) model assembled from partition counts:
// V0:   q^{-c/24} * #(parts >= 2, gaps >= 2)
// Vm15: q^{h-c/24} * #(gaps >= 2), h = -1/5.
FracQSeries character_25(Sector25 sector, std::size_t order);

// |chi_{Vm15}(q)|^2 + |chi_{V0}(q)|^2 at q = exp(2 pi i tau).
double torus_partition_function_25(Complex tau, std::size_t order = default_order);

// q d/dq f - (k/12) E_2 f.
FracQSeries serre_derivative(const FracQSeries &f, const Rational &k, std::size_t order);

// (q d/dq - E_2/6) q d/dq Z - coefficient * E_4 Z for the (2,5) characters.
FracQSeries ode_residual(Sector25 sector, std::size_t order, const Rational &coefficient = Rational(11, 3600));

// lambda^{c(1-g)/6}
double scale_anomaly(const Rational &c, long genus, double lambda);

} // namespace qcft
