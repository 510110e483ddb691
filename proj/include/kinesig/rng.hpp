#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace kinesig::rng {

// SplitMix64 finalizer. Counter-based draws hash a key chain instead of
// advancing shared state, so results do not depend on evaluation order or
// thread scheduling.
inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t combine(std::uint64_t a, std::uint64_t b) {
    return mix(a ^ (mix(b) + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2)));
}

inline std::uint64_t key(std::uint64_t a) { return mix(a); }
template <typename... Rest>
std::uint64_t key(std::uint64_t first, Rest... rest) {
    return combine(key(rest...), first);
}

// Uniform in [0, 1).
inline double uniform(std::uint64_t k) {
    return static_cast<double>(mix(k) >> 11) * 0x1.0p-53;
}

// Standard normal, Box-Muller on two decorrelated uniforms.
inline double normal(std::uint64_t k) {
    const double u1 = 1.0 - uniform(combine(k, 0x5u));
    const double u2 = uniform(combine(k, 0x7u));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

// Sequential stream for parameter init, shuffles, and the synthetic
// generator. SplitMix64; implementation-independent, unlike std::shuffle.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_normal() {
        const double u1 = 1.0 - next_uniform();
        const double u2 = next_uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // Unbiased integer in [0, n) via Lemire's multiply-shift with rejection.
    std::uint64_t next_below(std::uint64_t n) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        std::uint64_t lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0ULL - n) % n;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

template <typename T>
void shuffle(std::vector<T>& v, Stream& s) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(s.next_below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace kinesig::rng
