#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace inaccess {

// Deterministic random source. All sampling in the library goes through this
// wrapper so that a fixed seed reproduces output bit for bit on a platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1).
    double uniform() {
        return (gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Standard normal via Box-Muller; avoids the unspecified state layout of
    // std::normal_distribution.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do { u1 = uniform(); } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    std::uint64_t next_u64() { return gen_(); }

    // Independent stream for the i-th subtask of a seeded job.
    static std::uint64_t subseed(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Uniform point on the unit sphere surface in 3 dimensions.
inline void unit_sphere_point(Rng& rng, double& x, double& y, double& z) {
    z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    x = s * std::cos(phi);
    y = s * std::sin(phi);
}

// Uniform point in the closed unit ball in 3 dimensions.
inline void unit_ball_point(Rng& rng, double& x, double& y, double& z) {
    unit_sphere_point(rng, x, y, z);
    const double r = std::cbrt(rng.uniform());
    x *= r;
    y *= r;
    z *= r;
}

}  // namespace inaccess
