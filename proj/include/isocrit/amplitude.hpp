#pragma once

#include <string>
#include <vector>

namespace isocrit {

enum class AmplitudeFamily {
    gaussian,        // exp(-t^2/4)
    gaussian_scaled, // exp(-(t/scale)^2/4)
    poly_gaussian,   // (1 + c t^2) exp(-t^2/4)
};

// An amplitude is an even, rapidly decaying profile with value 1 at the
// origin; its square is the radial spectral density of the field. Only the
// three enumerated families are admitted so that evenness and decay stay
// verifiable.
class Amplitude {
public:
    static Amplitude gaussian();
    static Amplitude gaussian_scaled(double scale);
    static Amplitude poly_gaussian(double c);

    // Parses "gaussian", "gaussian-scaled:1.5", "poly-gaussian:0.25".
    static Amplitude parse(const std::string& spec);

    AmplitudeFamily family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    std::string name() const;

    // Evaluates the amplitude; even in t by construction.
    double operator()(double t) const;

    // Closed-form integral_0^inf r^k a(r)^2 dr where the family provides one.
    bool has_closed_form_radial_moment() const;
    double closed_form_radial_moment(int k) const;

    // Smallest radius beyond which a(r)^2 r^power stays below eps.
    double decay_cut(int power, double eps) const;

    bool operator==(const Amplitude& other) const {
        return family_ == other.family_ && params_ == other.params_;
    }

private:
    Amplitude(AmplitudeFamily family, std::vector<double> params);

    AmplitudeFamily family_;
    std::vector<double> params_;
};

} // namespace isocrit
