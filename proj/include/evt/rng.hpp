#pragma once

#include <cstdint>
#include <random>

namespace evt {

/// Deterministic random source. The generator algorithm is pinned to
/// std::mt19937_64 (bit-exact across platforms per the C++ standard); doubles
/// are derived from the top 53 bits of each draw, never from
/// std::uniform_real_distribution, so streams are reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on the open interval (0, 1).
    double uniform01() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via inverse-transform sampling.
    double normal();

    /// Student-t with `dof` degrees of freedom (ratio-of-normals construction).
    double student_t(int dof);

private:
    std::mt19937_64 gen_;
};

}  // namespace evt
