#pragma once

#include <cstdint>
#include <random>

namespace qppt {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard and the transforms below are our own, so sequences reproduce
/// bit-identically across platforms for a fixed seed.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    /// uniform in [0, 1), 53-bit mantissa
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// standard normal via Box-Muller on the uniform stream
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace qppt
