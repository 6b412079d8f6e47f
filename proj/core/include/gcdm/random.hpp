#pragma once

#include <cstdint>
#include <random>

namespace gcdm {

// Deterministic uniform sampling. std::mt19937_64 has a fixed bit stream,
// but the standard distributions do not, so the double mapping is spelled
// out here to keep results identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Uniform integer in [lo, hi], bounds inclusive.
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(gen_() % span);
    }

    bool coin() { return (gen_() & 1u) != 0; }

private:
    std::mt19937_64 gen_;
};

}  // namespace gcdm
