#include "isocrit/gaussian.hpp"

#include <cmath>

namespace isocrit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

CenteredGaussian::CenteredGaussian(const Eigen::MatrixXd& cov) {
    if (cov.rows() != cov.cols() || cov.rows() < 1)
        throw ConsistencyError("covariance must be square and nonempty");
    const double scale = cov.cwiseAbs().maxCoeff();
    const double asym = (cov - cov.transpose()).cwiseAbs().maxCoeff();
    if (scale > 0.0 && asym > 1e-12 * scale)
        throw ConsistencyError("covariance is not symmetric within tolerance");
    cov_ = 0.5 * (cov + cov.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov_, Eigen::EigenvaluesOnly);
    min_eig_ = eig.eigenvalues().minCoeff();
    const double trace = cov_.trace();
    if (min_eig_ < -1e-10 * std::max(trace, 0.0) - 1e-300)
        throw ConsistencyError("covariance is not numerically positive semidefinite");
}

RegressionResult condition(const Eigen::MatrixXd& var_y, const Eigen::MatrixXd& var_x,
                           const Eigen::MatrixXd& cov_yx) {
    if (var_y.rows() != var_y.cols() || var_x.rows() != var_x.cols() ||
        cov_yx.rows() != var_y.rows() || cov_yx.cols() != var_x.rows())
        throw ConsistencyError("regression formula received mismatched shapes");
    const CenteredGaussian x(var_x);
    if (!is_nondegenerate(x))
        throw DegeneracyError("conditioning variable is degenerate", x.min_eigenvalue());
    const Eigen::LDLT<Eigen::MatrixXd> factor(x.cov());
    Eigen::MatrixXd reduced = var_y - cov_yx * factor.solve(cov_yx.transpose());
    reduced = 0.5 * (reduced + reduced.transpose());
    return {std::move(reduced)};
}

double density_at_zero(const CenteredGaussian& g) {
    if (!is_nondegenerate(g))
        throw DegeneracyError("density at zero of a degenerate Gaussian", g.min_eigenvalue());
    const Eigen::LDLT<Eigen::MatrixXd> factor(g.cov());
    const double log_det = factor.vectorD().array().log().sum();
    return std::exp(-0.5 * g.dim() * std::log(kTwoPi) - 0.5 * log_det);
}

bool is_nondegenerate(const CenteredGaussian& g, double rel_tol) {
    const double trace = g.cov().trace();
    return g.min_eigenvalue() > rel_tol * trace / g.dim();
}

bool is_nondegenerate(const Eigen::MatrixXd& cov, double rel_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (cov + cov.transpose()),
                                                       Eigen::EigenvaluesOnly);
    return eig.eigenvalues().minCoeff() > rel_tol * cov.trace() / cov.rows();
}

SymmetricSqrt::SymmetricSqrt(const Eigen::MatrixXd& cov) : min_clipped_(0.0), clipped_count_(0) {
    const Eigen::MatrixXd sym = 0.5 * (cov + cov.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
    Eigen::VectorXd values = eig.eigenvalues();
    for (int i = 0; i < values.size(); ++i) {
        if (values[i] < 0.0) {
            min_clipped_ = std::min(min_clipped_, values[i]);
            ++clipped_count_;
            values[i] = 0.0;
        }
    }
    root_ = eig.eigenvectors() * values.cwiseSqrt().asDiagonal() * eig.eigenvectors().transpose();
}

std::vector<Eigen::VectorXd> sample(const CenteredGaussian& g, RngStream& stream, std::size_t n) {
    const SymmetricSqrt root(g.cov());
    std::vector<Eigen::VectorXd> result;
    result.reserve(n);
    Eigen::VectorXd z(g.dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (int c = 0; c < g.dim(); ++c) z[c] = stream.normal();
        result.push_back(root.apply(z));
    }
    return result;
}

} // namespace isocrit
