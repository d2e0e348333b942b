#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "snake/linalg.hpp"

namespace snake {

class GeneratingSequence;

/// Finite sequence of Schur (Verblunsky) parameters alpha_0..alpha_{m-1},
/// each strictly inside the unit disk.
class SchurSequence {
public:
    SchurSequence() = default;
    /// Throws InvalidSchurParameter naming the first index with |alpha| >= 1
    /// (NaN entries are rejected the same way).
    explicit SchurSequence(std::vector<Complex> alphas);

    std::size_t size() const noexcept { return alphas_.size(); }
    bool empty() const noexcept { return alphas_.empty(); }
    Complex alpha(std::size_t k) const { return alphas_.at(k); }
    /// Complementary parameter sqrt(1 - |alpha_k|^2), recomputed on each call.
    double rho(std::size_t k) const;
    std::span<const Complex> alphas() const noexcept { return alphas_; }

    /// First `count` parameters, padded with zeros when the sequence is shorter.
    SchurSequence resized(std::size_t count) const;

    friend bool operator==(const SchurSequence&, const SchurSequence&) = default;

private:
    std::vector<Complex> alphas_;
};

double complementary(Complex alpha);

/// Coefficients (ascending powers) of the orthonormal Szego polynomial phi_n
/// and its dual phi_n^*.
struct PolynomialPair {
    std::vector<Complex> phi;
    std::vector<Complex> phi_star;

    std::size_t degree() const { return phi.size() - 1; }
    static PolynomialPair unit() { return {{1.0}, {1.0}}; }
};

/// Coefficient j of the result is conj(c_{n-j}).
std::vector<Complex> dual(std::span<const Complex> coeffs);

Complex evaluate_polynomial(std::span<const Complex> coeffs, Complex z);

/// One Szego step: phi_{k+1} = (z phi_k - conj(alpha) phi_k^*) / rho and
/// phi_{k+1}^* = (phi_k^* - alpha z phi_k) / rho.
PolynomialPair szego_step(const PolynomialPair& pair, Complex alpha);

/// Coefficient form of (phi_n, phi_n^*) for n <= schur.size().
PolynomialPair szego_polynomials(const SchurSequence& schur, std::size_t n);

/// (phi_n(z), phi_n^*(z)) by running the recursion on values.
std::pair<Complex, Complex> evaluate_phi(const SchurSequence& schur, std::size_t n, Complex z);

/// Orthonormal Laurent basis element psi_n(z) = z^{-p_n} phi_n(z) when s_n = 0
/// and z^{-p_n} phi_n^*(z) when s_n = 1. Rejects z = 0.
Complex laurent_basis(const SchurSequence& schur, const GeneratingSequence& gen,
                      std::size_t n, Complex z);

}  // namespace snake
