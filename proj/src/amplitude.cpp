#include "isocrit/amplitude.hpp"

#include <cmath>
#include <sstream>

#include "isocrit/errors.hpp"

namespace isocrit {

namespace {

// integral_0^inf r^k e^{-r^2/2} dr = 2^{(k-1)/2} Gamma((k+1)/2)
double gaussian_radial_moment(int k) {
    return std::exp(0.5 * (k - 1) * std::log(2.0) + std::lgamma(0.5 * (k + 1)));
}

} // namespace

Amplitude::Amplitude(AmplitudeFamily family, std::vector<double> params)
    : family_(family), params_(std::move(params)) {}

Amplitude Amplitude::gaussian() { return Amplitude(AmplitudeFamily::gaussian, {}); }

Amplitude Amplitude::gaussian_scaled(double scale) {
    if (!(scale > 0.0)) throw ConfigError("gaussian-scaled amplitude needs scale > 0");
    return Amplitude(AmplitudeFamily::gaussian_scaled, {scale});
}

Amplitude Amplitude::poly_gaussian(double c) {
    if (!(c >= 0.0)) throw ConfigError("poly-gaussian amplitude needs c >= 0");
    return Amplitude(AmplitudeFamily::poly_gaussian, {c});
}

Amplitude Amplitude::parse(const std::string& spec) {
    std::string family = spec;
    std::vector<double> params;
    if (const auto colon = spec.find(':'); colon != std::string::npos) {
        family = spec.substr(0, colon);
        std::stringstream rest(spec.substr(colon + 1));
        std::string token;
        while (std::getline(rest, token, ',')) {
            try {
                params.push_back(std::stod(token));
            } catch (...) {
                throw ConfigError("bad amplitude parameter '" + token + "' in '" + spec + "'");
            }
        }
    }
    if (family == "gaussian") {
        if (!params.empty()) throw ConfigError("gaussian amplitude takes no parameters");
        return gaussian();
    }
    if (family == "gaussian-scaled") {
        if (params.size() != 1) throw ConfigError("gaussian-scaled amplitude takes one parameter");
        return gaussian_scaled(params[0]);
    }
    if (family == "poly-gaussian") {
        if (params.size() != 1) throw ConfigError("poly-gaussian amplitude takes one parameter");
        return poly_gaussian(params[0]);
    }
    throw ConfigError("unknown amplitude family '" + family + "'");
}

std::string Amplitude::name() const {
    std::ostringstream out;
    switch (family_) {
    case AmplitudeFamily::gaussian: out << "gaussian"; break;
    case AmplitudeFamily::gaussian_scaled: out << "gaussian-scaled:" << params_[0]; break;
    case AmplitudeFamily::poly_gaussian: out << "poly-gaussian:" << params_[0]; break;
    }
    return out.str();
}

double Amplitude::operator()(double t) const {
    switch (family_) {
    case AmplitudeFamily::gaussian:
        return std::exp(-0.25 * t * t);
    case AmplitudeFamily::gaussian_scaled: {
        const double u = t / params_[0];
        return std::exp(-0.25 * u * u);
    }
    case AmplitudeFamily::poly_gaussian:
        return (1.0 + params_[0] * t * t) * std::exp(-0.25 * t * t);
    }
    return 0.0;
}

bool Amplitude::has_closed_form_radial_moment() const { return true; }

double Amplitude::closed_form_radial_moment(int k) const {
    switch (family_) {
    case AmplitudeFamily::gaussian:
        return gaussian_radial_moment(k);
    case AmplitudeFamily::gaussian_scaled: {
        // a(r)^2 = e^{-r^2/(2 s^2)}; substitute r = s u.
        const double s = params_[0];
        return std::pow(s, k + 1) * gaussian_radial_moment(k);
    }
    case AmplitudeFamily::poly_gaussian: {
        // a(r)^2 = (1 + 2c r^2 + c^2 r^4) e^{-r^2/2}
        const double c = params_[0];
        return gaussian_radial_moment(k) + 2.0 * c * gaussian_radial_moment(k + 2) +
               c * c * gaussian_radial_moment(k + 4);
    }
    }
    return 0.0;
}

double Amplitude::decay_cut(int power, double eps) const {
    const auto weight = [&](double r) {
        const double a = (*this)(r);
        return a * a * std::pow(r, power);
    };
    // The weight rises to a single maximum and then decays; march past the
    // peak, then past the eps crossing, then bisect the crossing.
    double peak = 1.0;
    int guard = 0;
    while (weight(2.0 * peak) > weight(peak)) {
        peak *= 2.0;
        if (++guard > 60) throw ConsistencyError("amplitude decay cut search diverged");
    }
    double hi = 2.0 * peak;
    while (weight(hi) >= eps) {
        hi *= 2.0;
        if (++guard > 120) throw ConsistencyError("amplitude decay cut search diverged");
    }
    if (weight(0.5 * hi) < eps && weight(peak) < eps) return hi;
    double lo = 0.5 * hi;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (weight(mid) < eps) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

} // namespace isocrit
