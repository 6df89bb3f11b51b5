#include "maabo/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace maabo::rng {

std::vector<std::size_t> sample_without_replacement(Engine& g, std::size_t n, std::size_t count) {
    if (count > n)
        throw std::invalid_argument("sample_without_replacement: count exceeds population");
    // Partial Fisher-Yates over an index vector; fine at the population
    // sizes this library enumerates (bounded by the enumeration cap).
    std::vector<std::size_t> indices(n);
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = i + static_cast<std::size_t>(uniform_index(g, n - i));
        std::swap(indices[i], indices[j]);
    }
    indices.resize(count);
    std::sort(indices.begin(), indices.end());
    return indices;
}

} // namespace maabo::rng
