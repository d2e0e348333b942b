#include "snake/expand.hpp"

#include <algorithm>
#include <string>

#include "snake/error.hpp"

namespace snake {

std::size_t PathDescriptor::inner_end() const {
    const std::size_t hi = r < t ? t : r;
    return std::max(hi, inner_begin());
}

std::vector<std::size_t> PathDescriptor::inner() const {
    std::vector<std::size_t> out;
    for (std::size_t k = inner_begin(); k < inner_end(); ++k) out.push_back(k);
    return out;
}

PathDescriptor path(const GeneratingSequence& gen, std::size_t i, std::size_t j) {
    if (i > gen.size() || j > gen.size()) {
        throw IndexError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is outside the range covered by " + std::to_string(gen.size()) +
                         " shape bits");
    }
    PathDescriptor d;
    d.i = i;
    d.j = j;
    // G_{-1,0} does not exist, so index 0 always starts its own segment.
    d.r = (i == 0 || gen.s(i) == 1) ? i : i - 1;
    d.t = (j == 0 || gen.s(j) == 0) ? j : j - 1;
    d.b = d.r < d.t ? 1 : 0;

    if (i < j) {
        for (std::size_t k = i + 1; k < j && d.monotone; ++k) d.monotone = gen.s(k) == 0;
    } else if (i > j) {
        for (std::size_t k = j + 1; k < i && d.monotone; ++k) d.monotone = gen.s(k) == 1;
    }
    return d;
}

Complex entry(const SnakeFactorization& snake, std::size_t i, std::size_t j) {
    const std::size_t n = snake.factor_count();
    if (i >= n || j >= n) {
        throw IndexError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") needs Schur parameters up to index " +
                         std::to_string(std::max(i, j)) + " but only " + std::to_string(n) +
                         " are available");
    }
    const PathDescriptor d = path(snake.gen(), i, j);
    if (!d.monotone) return 0.0;

    const auto& schur = snake.schur();
    auto block_entry = [&](std::size_t k, std::size_t row, std::size_t col) -> Complex {
        const Complex alpha = schur.alpha(k);
        if (row == 0 && col == 0) return std::conj(alpha);
        if (row == 1 && col == 1) return -alpha;
        return schur.rho(k);
    };

    if (d.r == d.t) return block_entry(d.r, i - d.r, j - d.t);

    const auto b = static_cast<std::size_t>(d.b);
    Complex value = block_entry(d.r, i - d.r, b);
    for (std::size_t k = d.inner_begin(); k < d.inner_end(); ++k) value *= schur.rho(k);
    return value * block_entry(d.t, 1 - b, j - d.t);
}

Bandwidths bandwidths(const GeneratingSequence& gen) {
    std::size_t longest[2] = {0, 0};
    std::size_t run = 0;
    int current = -1;
    for (auto bit : gen.bits()) {
        run = (bit == current) ? run + 1 : 1;
        current = bit;
        longest[bit] = std::max(longest[bit], run);
    }
    return {1 + longest[1], 1 + longest[0]};
}

Bandwidths measured_bandwidths(const ComplexMatrix& a) {
    Bandwidths out;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j) == Complex(0.0)) continue;
            if (i > j) out.lower = std::max(out.lower, static_cast<std::size_t>(i - j));
            if (j > i) out.upper = std::max(out.upper, static_cast<std::size_t>(j - i));
        }
    }
    return out;
}

ComplexMatrix expand_dense(const SnakeFactorization& snake, std::size_t n) {
    if (n > snake.factor_count()) {
        throw IndexError("dense expansion of size " + std::to_string(n) + " needs " +
                         std::to_string(n) + " Schur parameters");
    }
    const auto dim = static_cast<Eigen::Index>(n);
    ComplexMatrix e(dim, dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entry(snake, i, j);
        }
    }
    return e;
}

}  // namespace snake
