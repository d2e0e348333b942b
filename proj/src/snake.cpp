#include "snake/snake.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "snake/error.hpp"

namespace snake {

GeneratingSequence::GeneratingSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        if (bits_[k] > 1) {
            throw ShapeError(k + 1, "generating sequence bit s_" + std::to_string(k + 1) +
                                        " must be 0 or 1");
        }
    }
}

GeneratingSequence GeneratingSequence::hessenberg(std::size_t m) {
    return GeneratingSequence(std::vector<std::uint8_t>(m, 0));
}

GeneratingSequence GeneratingSequence::cmv(std::size_t m) {
    std::vector<std::uint8_t> bits(m);
    for (std::size_t k = 1; k <= m; ++k) bits[k - 1] = static_cast<std::uint8_t>((k + 1) % 2);
    return GeneratingSequence(std::move(bits));
}

namespace {

std::string prefix_text(std::span<const int> exponents, std::size_t last) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i <= last; ++i) os << (i ? "," : "") << exponents[i];
    os << '}';
    return os.str();
}

}  // namespace

GeneratingSequence GeneratingSequence::from_monomials(std::span<const int> exponents) {
    if (exponents.empty() || exponents[0] != 0) {
        throw ShapeError(0, "monomial order must start with exponent 0");
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(exponents.size() - 1);
    int lo = 0;  // current prefix spans [lo, hi]
    int hi = 0;
    for (std::size_t n = 1; n < exponents.size(); ++n) {
        const int r = exponents[n];
        if (r == hi + 1) {
            bits.push_back(0);
            hi = r;
        } else if (r == lo - 1) {
            bits.push_back(1);
            lo = r;
        } else {
            throw ShapeError(n, "prefix " + prefix_text(exponents, n) +
                                    " is not a contiguous range");
        }
    }
    return GeneratingSequence(std::move(bits));
}

int GeneratingSequence::s(std::size_t k) const {
    if (k == 0 || k > bits_.size()) {
        throw IndexError("s_" + std::to_string(k) + " is outside s_1..s_" +
                         std::to_string(bits_.size()));
    }
    return bits_[k - 1];
}

std::size_t GeneratingSequence::p(std::size_t n) const {
    if (n > bits_.size()) {
        throw IndexError("p_" + std::to_string(n) + " is outside p_0..p_" +
                         std::to_string(bits_.size()));
    }
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.begin() + n, 1));
}

int GeneratingSequence::exponent(std::size_t n) const {
    const int pn = static_cast<int>(p(n));
    if (n == 0) return 0;
    return s(n) == 0 ? static_cast<int>(n) - pn : -pn;
}

std::vector<std::size_t> GeneratingSequence::partial_sums() const {
    std::vector<std::size_t> out(bits_.size() + 1, 0);
    for (std::size_t n = 1; n <= bits_.size(); ++n) out[n] = out[n - 1] + bits_[n - 1];
    return out;
}

std::vector<int> GeneratingSequence::exponents() const {
    std::vector<int> out(bits_.size() + 1, 0);
    int lo = 0;
    int hi = 0;
    for (std::size_t n = 1; n <= bits_.size(); ++n) out[n] = bits_[n - 1] ? --lo : ++hi;
    return out;
}

GeneratingSequence GeneratingSequence::prefix(std::size_t m) const {
    if (m > bits_.size()) throw IndexError("prefix longer than the generating sequence");
    return GeneratingSequence({bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(m)});
}

GeneratingSequence GeneratingSequence::flipped() const {
    std::vector<std::uint8_t> bits(bits_);
    for (auto& b : bits) b ^= 1;
    return GeneratingSequence(std::move(bits));
}

GivensFactor GivensFactor::from_schur(std::size_t k, Complex alpha) {
    const double rho = complementary(alpha);
    GivensFactor g;
    g.k = k;
    g.block << std::conj(alpha), rho, rho, -alpha;
    return g;
}

SnakeFactorization::SnakeFactorization(SchurSequence schur, GeneratingSequence gen)
    : schur_(std::move(schur)), gen_(std::move(gen)) {
    const std::size_t n = schur_.size();
    if (n == 0) throw ValidationError("a snake needs at least one Schur parameter");
    if (gen_.size() + 1 < n || gen_.size() > n) {
        throw ValidationError("generating sequence has " + std::to_string(gen_.size()) +
                              " bits but " + std::to_string(n) +
                              " Schur parameters need " + std::to_string(n - 1) + " or " +
                              std::to_string(n));
    }
    right_.push_back(0);
    std::vector<std::size_t> reversed_left;
    for (std::size_t k = 1; k < n; ++k) {
        if (gen_.s(k) == 0) {
            right_.push_back(k);
        } else {
            reversed_left.push_back(k);
        }
    }
    left_.assign(reversed_left.rbegin(), reversed_left.rend());
}

std::vector<std::size_t> SnakeFactorization::order() const {
    std::vector<std::size_t> out(left_);
    out.insert(out.end(), right_.begin(), right_.end());
    return out;
}

GivensFactor SnakeFactorization::factor(std::size_t k) const {
    return GivensFactor::from_schur(k, schur_.alpha(k));
}

SnakeFactorization build_snake(SchurSequence schur, GeneratingSequence gen) {
    return SnakeFactorization(std::move(schur), std::move(gen));
}

ComplexMatrix multiply_factors(std::size_t dim, std::span<const GivensFactor> ordered) {
    ComplexMatrix w = ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
    // Accumulate right to left: W <- G W touches only rows k, k+1.
    for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
        const auto k = static_cast<Eigen::Index>(it->k);
        if (it->k + 1 >= dim) throw IndexError("Givens factor does not fit the window");
        const Block2& g = it->block;
        for (Eigen::Index c = 0; c < w.cols(); ++c) {
            const Complex top = w(k, c);
            const Complex bottom = w(k + 1, c);
            w(k, c) = g(0, 0) * top + g(0, 1) * bottom;
            w(k + 1, c) = g(1, 0) * top + g(1, 1) * bottom;
        }
    }
    return w;
}

ComplexMatrix materialize_window(const SnakeFactorization& snake, std::size_t m) {
    if (m >= snake.factor_count()) {
        throw IndexError("window " + std::to_string(m) + " needs factors 0.." +
                         std::to_string(m) + " but only " +
                         std::to_string(snake.factor_count()) + " are available");
    }
    std::vector<GivensFactor> ordered;
    for (std::size_t k : snake.order()) {
        if (k <= m) ordered.push_back(snake.factor(k));
    }
    return multiply_factors(m + 2, ordered);
}

}  // namespace snake
