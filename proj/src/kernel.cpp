#include "isocrit/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "isocrit/errors.hpp"
#include "isocrit/moments.hpp"
#include "isocrit/quadrature.hpp"

namespace isocrit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Sign of the real value of i^{|gamma|} (times a further i when gamma_1 is
// odd, where the integral contributes the sine part): the pattern over
// |gamma| = 0..4 is +, -, -, +, +.
double derivative_sign(int total_order) {
    switch (total_order) {
    case 0: return 1.0;
    case 1: return -1.0;
    case 2: return -1.0;
    case 3: return 1.0;
    case 4: return 1.0;
    default: throw ConfigError("kernel table covers |gamma| <= 4");
    }
}

} // namespace

KernelTable::KernelTable(int dim, double separation) : dim_(dim), separation_(separation) {}

std::uint64_t KernelTable::pack(std::span<const int> gamma) {
    std::uint64_t key = 0;
    for (int g : gamma) key = (key << 3) | static_cast<std::uint64_t>(g);
    return key;
}

double KernelTable::entry(std::span<const int> gamma) const {
    if (static_cast<int>(gamma.size()) != dim_)
        throw ConfigError("kernel table multi-index must have m entries");
    const auto it = lookup_.find(pack(gamma));
    if (it == lookup_.end()) throw ConfigError("kernel table covers |gamma| <= 4");
    return it->second;
}

double KernelTable::value() const {
    const std::vector<int> zero(dim_, 0);
    return entry(zero);
}

double KernelTable::d1(int i) const {
    std::vector<int> g(dim_, 0);
    g[i] += 1;
    return entry(g);
}

double KernelTable::d2(int i, int j) const {
    std::vector<int> g(dim_, 0);
    g[i] += 1;
    g[j] += 1;
    return entry(g);
}

double KernelTable::d3(int i, int j, int k) const {
    std::vector<int> g(dim_, 0);
    g[i] += 1;
    g[j] += 1;
    g[k] += 1;
    return entry(g);
}

double KernelTable::d4(int i, int j, int k, int l) const {
    std::vector<int> g(dim_, 0);
    g[i] += 1;
    g[j] += 1;
    g[k] += 1;
    g[l] += 1;
    return entry(g);
}

double KernelTable::decay_envelope() const {
    double total = 0.0;
    for (const auto& [gamma, value] : entries_) total += std::abs(value);
    return total;
}

KernelEvaluator::KernelEvaluator(const Amplitude& a, int m) : amplitude_(a), dim_(m) {
    if (m < 1) throw ConfigError("kernel evaluator needs dimension >= 1");
    cut_ = a.decay_cut(m + 7, 1e-16);
}

double KernelEvaluator::base_integral(int k1, int kperp, double t) const {
    const bool odd = (k1 % 2) != 0;
    const auto wave = [&](double u) { return odd ? std::sin(t * u) : std::cos(t * u); };
    // Pre-split the oscillatory axis so each panel sees at most ~one period.
    const int pre = std::max(2, static_cast<int>(std::ceil(t * cut_ / M_PI)) / 2 + 2);
    const QuadratureOptions outer_opts{.rel_tol = 1e-10, .abs_tol = 1e-15,
                                       .max_panels = 4000, .initial_panels = pre};

    if (dim_ == 1) {
        if (kperp != 0) throw ConsistencyError("no perpendicular coordinates in dimension 1");
        return 2.0 * integrate(
                         [&](double u) {
                             const double a = amplitude_(u);
                             return wave(u) * std::pow(u, k1) * a * a;
                         },
                         0.0, cut_, outer_opts);
    }

    const int p = dim_ - 2 + kperp;
    const QuadratureOptions inner_opts{.rel_tol = 1e-11, .abs_tol = 1e-16,
                                       .max_panels = 2000, .initial_panels = 2};
    return 2.0 * integrate(
                     [&](double u) {
                         const double inner = integrate(
                             [&](double rho) {
                                 const double a = amplitude_(std::sqrt(u * u + rho * rho));
                                 return std::pow(rho, p) * a * a;
                             },
                             0.0, cut_, inner_opts);
                         return wave(u) * std::pow(u, k1) * inner;
                     },
                     0.0, cut_, outer_opts);
}

KernelTable KernelEvaluator::table(double t) const {
    if (t < 0.0) throw ConfigError("kernel separation must be nonnegative");
    KernelTable result(dim_, t);

    // Base integrals depend only on (gamma_1, |gamma_perp|); cache the nine
    // combinations that occur for |gamma| <= 4.
    std::map<std::pair<int, int>, double> base;
    const auto base_for = [&](int k1, int kperp) {
        const auto key = std::make_pair(k1, kperp);
        auto it = base.find(key);
        if (it == base.end()) it = base.emplace(key, base_integral(k1, kperp, t)).first;
        return it->second;
    };

    const double norm = std::pow(kTwoPi, -dim_);
    for (const auto& gamma : multi_indices_up_to(dim_, 4)) {
        const int total = std::accumulate(gamma.begin(), gamma.end(), 0);
        double value = 0.0;
        bool odd_perp = false;
        int kperp = 0;
        for (int j = 1; j < dim_; ++j) {
            if (gamma[j] % 2 != 0) odd_perp = true;
            kperp += gamma[j];
        }
        if (!odd_perp) {
            double angular = 1.0;
            if (dim_ >= 2) {
                std::vector<int> kappa(dim_ - 1);
                for (int j = 1; j < dim_; ++j) kappa[j - 1] = gamma[j] / 2;
                angular = angular_moment(dim_ - 1, kappa);
            }
            value = derivative_sign(total) * norm * angular * base_for(gamma[0], kperp);
        }
        result.entries_.emplace_back(gamma, value);
        result.lookup_.emplace(KernelTable::pack(gamma), value);
    }
    return result;
}

double KernelEvaluator::value(double t) const {
    return std::pow(kTwoPi, -dim_) *
           (dim_ >= 2 ? angular_moment(dim_ - 1, std::vector<int>(dim_ - 1, 0)) : 1.0) *
           base_integral(0, 0, t);
}

Eigen::VectorXd KernelEvaluator::grad_cross(double t) const {
    // d_m(j)(t) = -d2(j,j) = int cos(t xi_1) xi_j^2 dmu. Only two distinct
    // values by symmetry in the coordinates 2..m.
    const double norm = std::pow(kTwoPi, -dim_);
    Eigen::VectorXd result(dim_);
    if (dim_ == 1) {
        result[0] = norm * base_integral(2, 0, t);
        return result;
    }
    std::vector<int> kappa(dim_ - 1, 0);
    const double ang0 = angular_moment(dim_ - 1, kappa);
    kappa[0] = 1;
    const double ang2 = angular_moment(dim_ - 1, kappa);
    result[0] = norm * ang0 * base_integral(2, 0, t);
    const double perp = norm * ang2 * base_integral(0, 2, t);
    for (int j = 1; j < dim_; ++j) result[j] = perp;
    return result;
}

KernelTable kernel_derivatives(const Amplitude& a, int m, double t) {
    return KernelEvaluator(a, m).table(t);
}

Eigen::VectorXd grad_cross_cov(const Amplitude& a, int m, double t) {
    return KernelEvaluator(a, m).grad_cross(t);
}

double kernel_value(const Amplitude& a, int m, double t) {
    return KernelEvaluator(a, m).value(t);
}

} // namespace isocrit
