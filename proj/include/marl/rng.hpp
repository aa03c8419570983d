#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace marl {

// Deterministic RNG plumbing. Every stochastic component owns an mt19937_64
// stream derived from (master seed, purpose tag, index), so runs are
// reproducible and independent components never share draws. Uniform draws
// go through the helpers below instead of std distributions so the exact
// bit stream does not depend on the standard library implementation.

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a64(const void* bytes, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
    const unsigned char* p = static_cast<const unsigned char*>(bytes);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t mix_seed(uint64_t seed, std::string_view tag, uint64_t index = 0) {
    return splitmix64(seed ^ splitmix64(fnv1a64(tag) + index));
}

inline std::mt19937_64 seeded_stream(uint64_t seed, std::string_view tag, uint64_t index = 0) {
    return std::mt19937_64(mix_seed(seed, tag, index));
}

// Uniform double in [0, 1) with 53 bits of randomness.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * uniform01(g);
}

// Uniform integer in [0, n). n must be positive.
inline int rand_below(std::mt19937_64& g, int n) {
    return static_cast<int>(g() % static_cast<uint64_t>(n));
}

}  // namespace marl
