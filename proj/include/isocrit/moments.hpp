#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "isocrit/amplitude.hpp"

namespace isocrit {

// Radial moment I_k = integral_0^inf r^k a(r)^2 dr, by closed form when the
// family provides one, otherwise adaptive quadrature at relative tolerance
// 1e-10.
double radial_moment(const Amplitude& a, int k);

// Moment of the monomial xi^{2 kappa} over the unit sphere S^{m-1}:
//   2 prod_j Gamma(kappa_j + 1/2) / Gamma(|kappa| + m/2).
double angular_moment(int m, std::span<const int> kappa);

// Low-order moments of the spectral measure mu_a = (2pi)^{-m} a(|xi|)^2 dxi
// in dimension m, plus the radial moment table I_k for k <= m+7. All values
// are computed at construction and never mutated, so instances can be shared
// freely across threads.
class SpectralMoments {
public:
    SpectralMoments(const Amplitude& a, int dim);

    const Amplitude& amplitude() const { return amplitude_; }
    int dim() const { return dim_; }

    double s() const { return s_; } // total mass of mu_a
    double d() const { return d_; } // second moment  int xi_1^2 dmu
    double h() const { return h_; } // mixed fourth moment  int xi_1^2 xi_2^2 dmu

    // I_k for 0 <= k <= dim+7.
    double radial(int k) const;

private:
    Amplitude amplitude_;
    int dim_;
    double s_, d_, h_;
    std::vector<double> radial_;
};

SpectralMoments spectral_moments(const Amplitude& a, int m);

// Shared per-(amplitude, dimension) cache; references stay valid for the
// lifetime of the process.
const SpectralMoments& moments_for(const Amplitude& a, int m);

// Full moment M_alpha = int xi^alpha dmu_a: zero for odd alpha, otherwise
// (2pi)^{-m} I_{m-1+|alpha|} times the angular moment. Requires |alpha| <= 8.
double spectral_moment_full(const Amplitude& a, int m, std::span<const int> alpha);
double spectral_moment_full(const SpectralMoments& moments, std::span<const int> alpha);

// Gramian of the monomials {xi^alpha : |alpha| <= jet_order} in L^2(mu_a),
// in graded lexicographic order. Positive definite for admissible amplitudes.
Eigen::MatrixXd jet_gramian(const Amplitude& a, int m, int jet_order);

// The multi-index ordering used by jet_gramian.
std::vector<std::vector<int>> multi_indices_up_to(int m, int max_degree);

} // namespace isocrit
