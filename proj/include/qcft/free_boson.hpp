#pragma once

#include <cstddef>
#include <utility>

#include <qcft/numeric.hpp>

namespace qcft {

struct TorusModulus {
    Complex tau;

    explicit TorusModulus(Complex t);  // throws NotInUpperHalfPlane
};

// Momentum n and winding w with p_{L,R} = n/R +- w R/2; h = p^2/2.
struct MomentumWindingTerm {
    long n = 0;
    long w = 0;
    double h_left = 0.0;
    double h_right = 0.0;
};

MomentumWindingTerm momentum_winding_term(double radius, long n, long w);

// Smallest symmetric cutoff whose dropped terms are below tail_epsilon.
std::size_t adaptive_lattice_cutoff(double radius, double im_tau);

// sum_{|n|,|w| <= cutoff} q^{p_L^2/2} qbar^{p_R^2/2}; cutoff == 0 is adaptive.
// Self-dual radius sqrt(2); Theta_R = Theta_{2/R} via (n, w) <-> (w, n).
Complex theta_lattice_sum(double radius, const TorusModulus &tau, std::size_t cutoff = 0);

// Theta_R(tau) / |eta(tau)|^2.
double boson_partition_function(double radius, const TorusModulus &tau);

// |prod_{n <= cutoff} (1 + q^n)^{-1}|^2; cutoff == 0 is adaptive.
double twisted_boson_partition_function(const TorusModulus &tau, std::size_t cutoff = 0);

struct LatticeSpec {
    std::size_t sites_x = 16;
    std::size_t sites_y = 16;
    double length_x = 1.0;
    double length_y = 1.0;

    void validate() const;
};

// det(D + m1^2) / det(D + m2^2) for the periodic 5-point lattice Laplacian.
double lattice_determinant_ratio(const LatticeSpec &spec, double m1, double m2);

// exp sum_{|j|,|k| <= cutoff} log((lambda + m1^2)/(lambda + m2^2)) with
// lambda = (2 pi j / l1)^2 + (2 pi k / l2)^2. The sum grows like
// (m2^2 - m1^2) l1 l2 / (4 pi) * log(cutoff), so the ratio depends on the
// cutoff; it is the mode-truncated continuum reference, not a limit.
double continuum_determinant_ratio(std::pair<double, double> lengths, double m1, double m2, std::size_t cutoff);

} // namespace qcft
