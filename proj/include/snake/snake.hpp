#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "snake/linalg.hpp"
#include "snake/schur.hpp"

namespace snake {

/// Bits s_1..s_m with partial sums p_0 = 0, p_n = p_{n-1} + s_n. Fixes the
/// order in which monomials are orthogonalized: step n adds z^{n-p_n} when
/// s_n = 0 and z^{-p_n} when s_n = 1.
class GeneratingSequence {
public:
    GeneratingSequence() = default;
    /// Throws ShapeError at the first entry that is not 0 or 1 (reported 1-based).
    explicit GeneratingSequence(std::vector<std::uint8_t> bits);

    static GeneratingSequence hessenberg(std::size_t m);
    /// s_k = (k + 1) mod 2, i.e. 0, 1, 0, 1, ...
    static GeneratingSequence cmv(std::size_t m);
    /// Requires r_0 = 0 and every prefix r_0..r_n to be the contiguous range
    /// [-p_n, n - p_n]; otherwise throws ShapeError naming the first bad index.
    static GeneratingSequence from_monomials(std::span<const int> exponents);

    std::size_t size() const noexcept { return bits_.size(); }
    /// s_k for 1 <= k <= size().
    int s(std::size_t k) const;
    /// p_n for 0 <= n <= size().
    std::size_t p(std::size_t n) const;
    /// Exponent r_n of the n-th orthogonalized monomial.
    int exponent(std::size_t n) const;

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    std::vector<std::size_t> partial_sums() const;
    std::vector<int> exponents() const;

    /// First `m` bits.
    GeneratingSequence prefix(std::size_t m) const;
    /// Every bit complemented.
    GeneratingSequence flipped() const;

    friend bool operator==(const GeneratingSequence&, const GeneratingSequence&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Identity except for a 2x2 unitary block on rows/columns k, k+1.
struct GivensFactor {
    std::size_t k = 0;
    Block2 block = Block2::Identity();
    // False for phase-modified blocks produced by quadrature truncations.
    bool canonical = true;

    /// [[conj(alpha), rho], [rho, -alpha]]
    static GivensFactor from_schur(std::size_t k, Complex alpha);
};

/// Snake-shaped product of the canonical Givens factors G_{0,1}..G_{N-1,N}
/// with N = schur.size(). Factor k >= 1 joins the left product when s_k = 1
/// and the right product when s_k = 0; factor 0 starts the right product.
///
/// The generating sequence must carry N-1 or N bits: one bit per placed
/// factor, optionally followed by the bit that would place factor N.
class SnakeFactorization {
public:
    SnakeFactorization(SchurSequence schur, GeneratingSequence gen);

    const SchurSequence& schur() const noexcept { return schur_; }
    const GeneratingSequence& gen() const noexcept { return gen_; }
    std::size_t factor_count() const noexcept { return schur_.size(); }

    /// Left product indices, leftmost factor first.
    const std::vector<std::size_t>& left() const noexcept { return left_; }
    /// Right product indices, leftmost factor first.
    const std::vector<std::size_t>& right() const noexcept { return right_; }
    /// left() followed by right(): the full multiplication order.
    std::vector<std::size_t> order() const;

    GivensFactor factor(std::size_t k) const;

private:
    SchurSequence schur_;
    GeneratingSequence gen_;
    std::vector<std::size_t> left_;
    std::vector<std::size_t> right_;
};

SnakeFactorization build_snake(SchurSequence schur, GeneratingSequence gen);

/// Dense dim x dim product of the given factors, multiplied in sequence order.
ComplexMatrix multiply_factors(std::size_t dim, std::span<const GivensFactor> ordered);

/// (m+2)x(m+2) product of factors 0..m in snake order. Its (i, j) entry equals
/// the infinite matrix entry whenever max(i, j) <= m.
ComplexMatrix materialize_window(const SnakeFactorization& snake, std::size_t m);

}  // namespace snake
