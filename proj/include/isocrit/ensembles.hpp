#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "isocrit/gaussian.hpp"
#include "isocrit/rng.hpp"

namespace isocrit {

// The rotation-invariant Gaussian measure on symmetric m x m matrices with
//   E[h_ij h_kl] = v (delta_ij delta_kl + delta_ik delta_jl + delta_il delta_jk),
// i.e. Var(h_ii) = 3v, Cov(h_ii, h_jj) = v, Var(h_ij) = v for i < j, and all
// off-diagonal entries independent of each other and of the diagonal.
struct SymmetricEnsemble {
    int dim;
    double v;
};

// Flattening convention used everywhere for symmetric matrices: orthonormal
// coordinates (diagonal entries as-is, off-diagonal entries times sqrt(2)),
// ordered by the upper-triangle pairs (i,j), i <= j, row-major.
int sym_dim(int m);
const std::vector<std::pair<int, int>>& sym_pairs(int m);
Eigen::VectorXd sym_flatten(const Eigen::MatrixXd& h);
Eigen::MatrixXd sym_unflatten(const Eigen::VectorXd& w, int m);

// Covariance of the flattened ensemble in the orthonormal coordinates.
Eigen::MatrixXd ensemble_covariance(const SymmetricEnsemble& e);

// Samples H = G + xi * I with independent G (GOE-like: Var g_ii = 2v,
// Var g_ij = v) and scalar xi with Var xi = v; this reproduces the ensemble
// covariance exactly and is O(m^2) per sample.
Eigen::MatrixXd sample_matrix(const SymmetricEnsemble& e, RngStream& stream);

// Monte Carlo estimate of E |det H| over the ensemble. Work is split into
// fixed-size chunks with per-chunk substreams, so the estimate is identical
// for any worker count.
MonteCarloEstimate expected_abs_det(int m, double v, std::uint64_t n, const RngStream& stream);

// Monte Carlo estimate of E[|det H_x| * |det H_y|] where the stacked flattened
// pair (H_x, H_y) is centered Gaussian with the given covariance (dimension
// 2 * m(m+1)/2). Throws DegeneracyError for degenerate joint covariances.
MonteCarloEstimate expected_abs_det_pair(const Eigen::MatrixXd& joint_cov, std::uint64_t n,
                                         const RngStream& stream);

} // namespace isocrit
