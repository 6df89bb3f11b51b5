#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace maabo::rng {

// std::mt19937_64 output is fully specified by the standard; the draw
// helpers below avoid std::uniform_*_distribution, whose results are
// implementation-defined, so seeded runs reproduce bit-exactly everywhere.

using Engine = std::mt19937_64;

/// Unbiased draw from [0, n).
inline std::uint64_t uniform_index(Engine& g, std::uint64_t n) {
    const std::uint64_t bound = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t r;
    do {
        r = g();
    } while (r >= bound);
    return r % n;
}

/// Uniform double in [0, 1) with 53 bits of precision.
inline double uniform_real01(Engine& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Fisher-Yates shuffle.
template <typename T>
void shuffle(Engine& g, std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_index(g, i));
        std::swap(items[i - 1], items[j]);
    }
}

/// Draw `count` distinct indices from [0, n), returned in ascending order.
std::vector<std::size_t> sample_without_replacement(Engine& g, std::size_t n, std::size_t count);

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Derives independent seed streams (split / noise / search, ...) from one
/// base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base ^ splitmix64(stream + 1));
}

} // namespace maabo::rng
