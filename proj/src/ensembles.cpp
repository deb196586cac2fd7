#include "isocrit/ensembles.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "isocrit/errors.hpp"
#include "isocrit/parallel.hpp"

namespace isocrit {

namespace {

constexpr std::uint64_t kChunk = 1 << 16;

struct ChunkStats {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t n = 0;
};

MonteCarloEstimate merge_chunks(const std::vector<ChunkStats>& chunks) {
    double sum = 0.0, sum_sq = 0.0;
    std::uint64_t n = 0;
    for (const auto& c : chunks) {
        sum += c.sum;
        sum_sq += c.sum_sq;
        n += c.n;
    }
    const double mean = sum / static_cast<double>(n);
    const double var = std::max(0.0, sum_sq / static_cast<double>(n) - mean * mean);
    return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

double abs_det(const Eigen::MatrixXd& h) {
    switch (h.rows()) {
    case 1: return std::abs(h(0, 0));
    case 2: return std::abs(h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0));
    default: return std::abs(h.determinant());
    }
}

} // namespace

int sym_dim(int m) { return m * (m + 1) / 2; }

const std::vector<std::pair<int, int>>& sym_pairs(int m) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::pair<int, int>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it == cache.end()) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) pairs.emplace_back(i, j);
        it = cache.emplace(m, std::move(pairs)).first;
    }
    return it->second;
}

Eigen::VectorXd sym_flatten(const Eigen::MatrixXd& h) {
    const int m = static_cast<int>(h.rows());
    const auto& pairs = sym_pairs(m);
    Eigen::VectorXd w(sym_dim(m));
    const double sqrt2 = std::sqrt(2.0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [i, j] = pairs[k];
        w[static_cast<int>(k)] = (i == j) ? h(i, i) : sqrt2 * h(i, j);
    }
    return w;
}

Eigen::MatrixXd sym_unflatten(const Eigen::VectorXd& w, int m) {
    const auto& pairs = sym_pairs(m);
    Eigen::MatrixXd h(m, m);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [i, j] = pairs[k];
        if (i == j) {
            h(i, i) = w[static_cast<int>(k)];
        } else {
            h(i, j) = h(j, i) = inv_sqrt2 * w[static_cast<int>(k)];
        }
    }
    return h;
}

Eigen::MatrixXd ensemble_covariance(const SymmetricEnsemble& e) {
    const auto& pairs = sym_pairs(e.dim);
    const int q = sym_dim(e.dim);
    Eigen::MatrixXd cov(q, q);
    for (int a = 0; a < q; ++a) {
        const auto [i, j] = pairs[a];
        for (int b = 0; b < q; ++b) {
            const auto [k, l] = pairs[b];
            // E[l_ij l_kl] in entry coordinates, then the sqrt(2) factors.
            const double entry = e.v * ((i == j && k == l ? 1.0 : 0.0) +
                                        (i == k && j == l ? 1.0 : 0.0) +
                                        (i == l && j == k ? 1.0 : 0.0));
            const double scale = (i == j ? 1.0 : std::sqrt(2.0)) * (k == l ? 1.0 : std::sqrt(2.0));
            cov(a, b) = scale * entry;
        }
    }
    return cov;
}

Eigen::MatrixXd sample_matrix(const SymmetricEnsemble& e, RngStream& stream) {
    const int m = e.dim;
    Eigen::MatrixXd h(m, m);
    const double sd_diag = std::sqrt(2.0 * e.v);
    const double sd_off = std::sqrt(e.v);
    for (int i = 0; i < m; ++i) {
        h(i, i) = sd_diag * stream.normal();
        for (int j = i + 1; j < m; ++j) h(i, j) = h(j, i) = sd_off * stream.normal();
    }
    const double xi = sd_off * stream.normal();
    for (int i = 0; i < m; ++i) h(i, i) += xi;
    return h;
}

MonteCarloEstimate expected_abs_det(int m, double v, std::uint64_t n, const RngStream& stream) {
    if (n < 1) throw ConfigError("expected_abs_det needs at least one sample");
    const std::uint64_t n_chunks = (n + kChunk - 1) / kChunk;
    std::vector<ChunkStats> chunks(n_chunks);
    parallel_for(n_chunks, [&](std::size_t c) {
        RngStream local = stream.substream(c);
        const std::uint64_t count = std::min<std::uint64_t>(kChunk, n - c * kChunk);
        const SymmetricEnsemble ensemble{m, v};
        ChunkStats stats;
        for (std::uint64_t i = 0; i < count; ++i) {
            const double value = abs_det(sample_matrix(ensemble, local));
            stats.sum += value;
            stats.sum_sq += value * value;
        }
        stats.n = count;
        chunks[c] = stats;
    });
    return merge_chunks(chunks);
}

MonteCarloEstimate expected_abs_det_pair(const Eigen::MatrixXd& joint_cov, std::uint64_t n,
                                         const RngStream& stream) {
    if (n < 1) throw ConfigError("expected_abs_det_pair needs at least one sample");
    const int two_q = static_cast<int>(joint_cov.rows());
    const int q = two_q / 2;
    // invert q = m(m+1)/2
    int m = 0;
    while (sym_dim(m + 1) <= q) ++m;
    if (two_q % 2 != 0 || sym_dim(m) != q)
        throw ConsistencyError("pair covariance dimension is not 2 * m(m+1)/2");
    const CenteredGaussian joint(joint_cov); // validates symmetry and near-PSD
    (void)joint;
    const SymmetricSqrt root(joint_cov);

    const std::uint64_t n_chunks = (n + kChunk - 1) / kChunk;
    std::vector<ChunkStats> chunks(n_chunks);
    parallel_for(n_chunks, [&](std::size_t c) {
        RngStream local = stream.substream(c);
        const std::uint64_t count = std::min<std::uint64_t>(kChunk, n - c * kChunk);
        ChunkStats stats;
        Eigen::VectorXd z(two_q);
        for (std::uint64_t i = 0; i < count; ++i) {
            for (int k = 0; k < two_q; ++k) z[k] = local.normal();
            const Eigen::VectorXd w = root.apply(z);
            const double value = abs_det(sym_unflatten(w.head(q), m)) *
                                 abs_det(sym_unflatten(w.tail(q), m));
            stats.sum += value;
            stats.sum_sq += value * value;
        }
        stats.n = count;
        chunks[c] = stats;
    });
    return merge_chunks(chunks);
}

} // namespace isocrit
