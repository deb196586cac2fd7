#include "isocrit/moments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "isocrit/errors.hpp"
#include "isocrit/quadrature.hpp"

namespace isocrit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double radial_moment_quadrature(const Amplitude& a, int k) {
    // Cut where a(r)^2 r^{m+7}-type weights are negligible; k+1 dominates k.
    const double cut = a.decay_cut(k + 1, 1e-16);
    return integrate(
        [&](double r) {
            const double v = a(r);
            return v * v * std::pow(r, k);
        },
        0.0, cut, {.rel_tol = 1e-10, .abs_tol = 0.0, .max_panels = 4000, .initial_panels = 4});
}

} // namespace

double radial_moment(const Amplitude& a, int k) {
    if (k < 0) throw ConfigError("radial moment needs k >= 0");
    if (a.has_closed_form_radial_moment()) return a.closed_form_radial_moment(k);
    return radial_moment_quadrature(a, k);
}

double angular_moment(int m, std::span<const int> kappa) {
    if (static_cast<int>(kappa.size()) != m)
        throw ConfigError("angular moment multi-index must have m entries");
    double log_num = std::log(2.0);
    int total = 0;
    for (int kj : kappa) {
        if (kj < 0) throw ConfigError("angular moment multi-index must be nonnegative");
        log_num += std::lgamma(kj + 0.5);
        total += kj;
    }
    return std::exp(log_num - std::lgamma(total + 0.5 * m));
}

SpectralMoments::SpectralMoments(const Amplitude& a, int dim) : amplitude_(a), dim_(dim) {
    if (dim < 1) throw ConfigError("spectral moments need dimension >= 1");
    radial_.resize(dim + 8);
    for (int k = 0; k <= dim + 7; ++k) radial_[k] = radial_moment(a, k);

    const double norm = std::pow(kTwoPi, -dim);
    const double half_m = 0.5 * dim;
    // Surface moments of S^{m-1}: full sphere, xi_1^2, and xi_1^2 xi_2^2
    // (the latter written for all m through the gamma-function form).
    const double area = 2.0 * std::pow(M_PI, half_m) / std::tgamma(half_m);
    const double ang_2 = std::pow(M_PI, half_m) / std::tgamma(half_m + 1.0);
    const double ang_22 = 0.5 * std::pow(M_PI, half_m) / std::tgamma(half_m + 2.0);

    s_ = norm * radial_[dim - 1] * area;
    d_ = norm * radial_[dim + 1] * ang_2;
    // For m = 1 there is no second coordinate; h is defined by the same
    // radial/angular pattern, which makes int xi_1^4 dmu equal 3h in every
    // dimension.
    h_ = norm * radial_[dim + 3] * ang_22;
}

double SpectralMoments::radial(int k) const {
    if (k < 0 || k >= static_cast<int>(radial_.size()))
        throw ConfigError("radial moment table covers 0 <= k <= m+7");
    return radial_[k];
}

SpectralMoments spectral_moments(const Amplitude& a, int m) { return SpectralMoments(a, m); }

const SpectralMoments& moments_for(const Amplitude& a, int m) {
    static std::mutex mutex;
    static std::map<std::string, SpectralMoments> cache;
    const std::string key = a.name() + "|" + std::to_string(m);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, SpectralMoments(a, m)).first;
    return it->second;
}

double spectral_moment_full(const SpectralMoments& moments, std::span<const int> alpha) {
    const int m = moments.dim();
    if (static_cast<int>(alpha.size()) != m)
        throw ConfigError("moment multi-index must have m entries");
    int total = 0;
    std::vector<int> kappa(m);
    for (int j = 0; j < m; ++j) {
        if (alpha[j] < 0) throw ConfigError("moment multi-index must be nonnegative");
        if (alpha[j] % 2 != 0) return 0.0; // odd multi-index
        kappa[j] = alpha[j] / 2;
        total += alpha[j];
    }
    if (total > 8) throw ConfigError("moment order capped at |alpha| <= 8");
    return std::pow(kTwoPi, -m) * moments.radial(m - 1 + total) * angular_moment(m, kappa);
}

double spectral_moment_full(const Amplitude& a, int m, std::span<const int> alpha) {
    return spectral_moment_full(moments_for(a, m), alpha);
}

namespace {

void enumerate_compositions(int m, int degree, int pos, std::vector<int>& current,
                            std::vector<std::vector<int>>& out) {
    if (pos == m - 1) {
        current[pos] = degree;
        out.push_back(current);
        return;
    }
    for (int v = degree; v >= 0; --v) {
        current[pos] = v;
        enumerate_compositions(m, degree - v, pos + 1, current, out);
    }
}

} // namespace

std::vector<std::vector<int>> multi_indices_up_to(int m, int max_degree) {
    std::vector<std::vector<int>> result;
    std::vector<int> current(m, 0);
    for (int degree = 0; degree <= max_degree; ++degree)
        enumerate_compositions(m, degree, 0, current, result);
    return result;
}

Eigen::MatrixXd jet_gramian(const Amplitude& a, int m, int jet_order) {
    if (jet_order < 0 || jet_order > 3) throw ConfigError("jet order capped at 3");
    if (m < 1 || m > 4) throw ConfigError("jet gramian supports 1 <= m <= 4");
    const auto& moments = moments_for(a, m);
    const auto indices = multi_indices_up_to(m, jet_order);
    const int n = static_cast<int>(indices.size());
    Eigen::MatrixXd gram(n, n);
    std::vector<int> sum(m);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int c = 0; c < m; ++c) sum[c] = indices[i][c] + indices[j][c];
            const double value = spectral_moment_full(moments, sum);
            gram(i, j) = value;
            gram(j, i) = value;
        }
    }
    return gram;
}

} // namespace isocrit
