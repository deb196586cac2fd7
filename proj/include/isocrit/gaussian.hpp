#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "isocrit/errors.hpp"
#include "isocrit/parallel.hpp"
#include "isocrit/rng.hpp"

namespace isocrit {

struct MonteCarloEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

// A centered Gaussian vector, identified by its covariance. The constructor
// checks the symmetry and numerical-PSD invariants and symmetrizes the
// stored matrix.
class CenteredGaussian {
public:
    explicit CenteredGaussian(const Eigen::MatrixXd& cov);

    int dim() const { return static_cast<int>(cov_.rows()); }
    const Eigen::MatrixXd& cov() const { return cov_; }
    double min_eigenvalue() const { return min_eig_; }

private:
    Eigen::MatrixXd cov_;
    double min_eig_;
};

struct RegressionResult {
    // Variance of Z = Y - E[Y || X]; what remains of Y after conditioning on
    // X = 0. Positive semidefinite and dominated by Var[Y].
    Eigen::MatrixXd cov_conditioned;
};

// Var[Y] - Cov[Y,X] Var[X]^{-1} Cov[X,Y] via a symmetric factorization solve.
// Throws DegeneracyError when varX fails the nondegeneracy test.
RegressionResult condition(const Eigen::MatrixXd& var_y, const Eigen::MatrixXd& var_x,
                           const Eigen::MatrixXd& cov_yx);

// (2 pi)^{-dim/2} det(cov)^{-1/2}; the density of the vector at the origin.
double density_at_zero(const CenteredGaussian& g);

// True iff the smallest eigenvalue exceeds rel_tol * trace / dim. This is
// the single threshold at which the whole pipeline refuses a covariance
// instead of returning noise.
bool is_nondegenerate(const CenteredGaussian& g, double rel_tol = 1e-10);
bool is_nondegenerate(const Eigen::MatrixXd& cov, double rel_tol = 1e-10);

// Symmetric square root by eigendecomposition. Tiny negative eigenvalues of
// nearly-PSD inputs are clipped to zero; the most negative one clipped is
// reported through min_clipped().
class SymmetricSqrt {
public:
    explicit SymmetricSqrt(const Eigen::MatrixXd& cov);

    int dim() const { return static_cast<int>(root_.rows()); }
    const Eigen::MatrixXd& matrix() const { return root_; }
    double min_clipped() const { return min_clipped_; }
    int clipped_count() const { return clipped_count_; }

    Eigen::VectorXd apply(const Eigen::VectorXd& z) const { return root_ * z; }

private:
    Eigen::MatrixXd root_;
    double min_clipped_;
    int clipped_count_;
};

// n samples drawn through the symmetric square root; deterministic given the
// stream state.
std::vector<Eigen::VectorXd> sample(const CenteredGaussian& g, RngStream& stream, std::size_t n);

// Monte Carlo estimate of int f dGamma_A for a functional f of a centered
// Gaussian vector with covariance A.
template <class F>
MonteCarloEstimate gaussian_expectation(F&& f, const Eigen::MatrixXd& a, std::size_t n,
                                        RngStream& stream) {
    const SymmetricSqrt root(a);
    const int dim = root.dim();
    Eigen::VectorXd z(dim);
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (int c = 0; c < dim; ++c) z[c] = stream.normal();
        const double value = f(root.apply(z));
        sum += value;
        sum_sq += value * value;
    }
    const double mean = sum / static_cast<double>(n);
    const double var = std::max(0.0, sum_sq / static_cast<double>(n) - mean * mean);
    return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

} // namespace isocrit
