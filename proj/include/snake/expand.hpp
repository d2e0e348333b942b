#pragma once

#include <cstddef>

#include "snake/linalg.hpp"
#include "snake/snake.hpp"

namespace snake {

/// Path on the snake between a left arrow at height i and a right arrow at
/// height j. r and t are the outermost segments; the innermost segments are
/// the indices strictly between them.
struct PathDescriptor {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t r = 0;
    std::size_t t = 0;
    // 0 when r > t, 1 when r < t; meaningless (0) when r == t.
    int b = 0;
    bool monotone = true;

    /// Innermost segment range [inner_begin, inner_end); empty when |r - t| <= 1.
    std::size_t inner_begin() const { return (r < t ? r : t) + 1; }
    std::size_t inner_end() const;
    std::vector<std::size_t> inner() const;
};

/// Requires i, j <= gen.size() so that s_i and s_j exist (i = 0 and j = 0
/// never consult a bit).
PathDescriptor path(const GeneratingSequence& gen, std::size_t i, std::size_t j);

/// Entry (i, j) of the infinite snake matrix from the path rule. Valid for
/// max(i, j) < snake.factor_count(). O(|i - j| + 1), no allocation.
Complex entry(const SnakeFactorization& snake, std::size_t i, std::size_t j);

struct Bandwidths {
    std::size_t lower = 0;
    std::size_t upper = 0;
    friend bool operator==(const Bandwidths&, const Bandwidths&) = default;
};

/// Structural bandwidths: 1 + longest run of 1s (lower) and of 0s (upper)
/// over the stored bits.
Bandwidths bandwidths(const GeneratingSequence& gen);

/// Largest i - j (lower) and j - i (upper) over entries that are exactly nonzero.
Bandwidths measured_bandwidths(const ComplexMatrix& a);

/// n x n matrix of entry(snake, i, j); requires n <= snake.factor_count().
ComplexMatrix expand_dense(const SnakeFactorization& snake, std::size_t n);

}  // namespace snake
