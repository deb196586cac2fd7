#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "isocrit/amplitude.hpp"

namespace isocrit {

// Partial derivatives of the covariance kernel K_a at the point t*e_1, for
// every multi-index of total order <= 4. Entries whose exponent in any of the
// coordinates 2..m is odd vanish identically and are stored as exact zeros.
//
// Units: the entry for multi-index gamma is in kernel units per position^|gamma|.
class KernelTable {
public:
    KernelTable(int dim, double separation);

    int dim() const { return dim_; }
    double separation() const { return separation_; }

    double entry(std::span<const int> gamma) const;

    // Derivative accessors by differentiated coordinate (0-based).
    double value() const;
    double d1(int i) const;
    double d2(int i, int j) const;
    double d3(int i, int j, int k) const;
    double d4(int i, int j, int k, int l) const;

    // Decay envelope T = sum of |entries| over all |gamma| <= 4.
    double decay_envelope() const;

    const std::vector<std::pair<std::vector<int>, double>>& entries() const { return entries_; }

private:
    friend class KernelEvaluator;

    static std::uint64_t pack(std::span<const int> gamma);

    int dim_;
    double separation_;
    std::vector<std::pair<std::vector<int>, double>> entries_;
    std::map<std::uint64_t, double> lookup_;
};

// Computes kernel derivatives by reducing the Fourier integral over R^m to a
// quadrature over (xi_1, |xi_perp|); the angular part of the perpendicular
// coordinates is a sphere moment. m = 1 collapses to a one-dimensional
// oscillatory quadrature. All entries are real: the reduction takes the
// cosine or sine part analytically, so no imaginary residue can survive.
class KernelEvaluator {
public:
    KernelEvaluator(const Amplitude& a, int m);

    const Amplitude& amplitude() const { return amplitude_; }
    int dim() const { return dim_; }

    // Full table of derivatives at separation t >= 0.
    KernelTable table(double t) const;

    // K_a(t e_1) alone (single quadrature, much cheaper than a full table).
    double value(double t) const;

    // Gradient cross-covariances d_m(j)(t) = int cos(t xi_1) xi_j^2 dmu_a,
    // equal to -d2(j,j) of the table at separation t.
    Eigen::VectorXd grad_cross(double t) const;

private:
    // 2 * int w(t u) u^k1 [ int rho^{m-2+kperp} a(sqrt(u^2+rho^2))^2 drho ] du
    // with w = cos for even k1 and w = sin for odd k1.
    double base_integral(int k1, int kperp, double t) const;

    Amplitude amplitude_;
    int dim_;
    double cut_;
};

KernelTable kernel_derivatives(const Amplitude& a, int m, double t);
Eigen::VectorXd grad_cross_cov(const Amplitude& a, int m, double t);
double kernel_value(const Amplitude& a, int m, double t);

} // namespace isocrit
