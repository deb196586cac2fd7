#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace isocrit {

// Deterministic, platform-independent random streams.
//
// Streams are identified by a 64-bit key. Substreams are derived by hashing
// (key, index), so any piece of work can be replayed in isolation and results
// do not depend on how work is distributed over threads.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t key, std::uint64_t value) {
    return splitmix64(key ^ (value + 0x9E3779B97F4A7C15ull + (key << 6) + (key >> 2)));
}

// xoshiro256++ with explicit uniform/normal conversions. Avoids the
// implementation-defined behavior of <random> distributions so output is
// bit-identical across standard libraries.
class RngStream {
public:
    explicit RngStream(std::uint64_t key) : key_(key) {
        std::uint64_t s = key;
        for (auto& w : state_) w = (s = splitmix64(s));
        have_spare_ = false;
    }

    static RngStream from_key(std::initializer_list<std::uint64_t> parts) {
        std::uint64_t k = 0x853C49E6748FEA9Bull;
        for (std::uint64_t p : parts) k = hash_combine(k, p);
        return RngStream(k);
    }

    std::uint64_t key() const { return key_; }

    RngStream substream(std::uint64_t index) const {
        return RngStream(hash_combine(key_, index));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0,1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; the spare value is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1] so the log is finite.
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t key_;
    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_;
};

} // namespace isocrit
