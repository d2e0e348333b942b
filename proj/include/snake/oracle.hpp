#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "snake/laurent.hpp"
#include "snake/linalg.hpp"
#include "snake/schur.hpp"
#include "snake/snake.hpp"

namespace snake {

// Probability measures on the unit circle with a known moment route.

struct Lebesgue {
    friend bool operator==(const Lebesgue&, const Lebesgue&) = default;
};

/// dtheta / (2 pi |phi_K(e^{i theta})|^2) for the Szego polynomial of the
/// prefix; its Schur parameters are the prefix followed by zeros.
struct BernsteinSzego {
    SchurSequence prefix;
    friend bool operator==(const BernsteinSzego&, const BernsteinSzego&) = default;
};

/// Constant Schur parameters alpha_k = a, realized through the Bernstein-Szego
/// measure of its first `length` parameters.
struct Geronimus {
    Complex a;
    std::size_t length = 12;
    friend bool operator==(const Geronimus&, const Geronimus&) = default;
};

/// Discrete measure sum_k w_k delta(theta - theta_k). Weights are normalized
/// to unit mass on construction.
struct Grid {
    std::vector<double> theta;
    std::vector<double> weight;
    friend bool operator==(const Grid&, const Grid&) = default;
};

class MeasureSpec {
public:
    using Variant = std::variant<Lebesgue, Geronimus, BernsteinSzego, Grid>;

    MeasureSpec() = default;

    static MeasureSpec lebesgue() { return MeasureSpec(Lebesgue{}); }
    static MeasureSpec bernstein_szego(SchurSequence prefix);
    static MeasureSpec geronimus(Complex a, std::size_t length = 12);
    /// points: (theta, weight) with theta in [-pi, pi) and weight > 0.
    static MeasureSpec grid(const std::vector<std::pair<double, double>>& points);

    const Variant& variant() const noexcept { return v_; }

    /// Known Schur parameters alpha_0..alpha_{count-1}; empty for grids.
    std::optional<SchurSequence> schur_parameters(std::size_t count) const;

    friend bool operator==(const MeasureSpec&, const MeasureSpec&) = default;

private:
    explicit MeasureSpec(Variant v) : v_(std::move(v)) {}
    Variant v_ = Lebesgue{};
};

/// mu_j = <z^j, 1> = integral of conj(e^{i j theta}) dmu for |j| <= jmax.
class MomentTable {
public:
    MomentTable() : values_{1.0} {}
    /// values[j] = mu_j for j = 0..jmax; values[0] is forced to 1 and
    /// mu_{-j} = conj(mu_j).
    explicit MomentTable(std::vector<Complex> values);

    std::size_t jmax() const noexcept { return values_.size() - 1; }
    Complex mu(long j) const;

    /// (mu_{a-b})_{0 <= a, b <= n}
    ComplexMatrix toeplitz(std::size_t n) const;
    /// Pivoted LDL^T test on toeplitz(n).
    bool positive_definite(std::size_t n) const;

private:
    std::vector<Complex> values_;
};

/// Exact for Lebesgue and grids. Density measures get their moments from the
/// orthogonality of their own Szego polynomials, which is exact up to rounding
/// even when zeros of phi_n crowd the circle.
MomentTable moments(const MeasureSpec& measure, std::size_t jmax);

/// Same table by integrating the density: trapezoid on a uniform grid of
/// >= 4096 points, doubled until two successive grids agree to 1e-11 relative.
/// Throws NumericalError if that does not happen by 2^20 points.
MomentTable quadrature_moments(const MeasureSpec& measure, std::size_t jmax);

/// <f, g> = sum conj(f_a) g_b mu_{a-b}; conjugate-linear in f.
Complex inner_product(const MomentTable& table, const LaurentPoly& f, const LaurentPoly& g);

/// psi_0..psi_n by Gram-Schmidt (one reorthogonalization pass) over the
/// monomials in the order fixed by gen. Each psi_k has a real positive
/// coefficient on its newest monomial.
std::vector<LaurentPoly> gram_schmidt_laurent(const MomentTable& table,
                                              const GeneratingSequence& gen, std::size_t n);

/// alpha_0..alpha_{n-1} from the Gram-Schmidt Szego polynomials via
/// conj(alpha_k) = -phi_{k+1}(0) / kappa_{k+1}.
SchurSequence schur_from_moments(const MomentTable& table, std::size_t n);

/// <psi_i, z psi_j> from Gram-Schmidt output alone.
Complex matrix_entry_oracle(const MomentTable& table, const GeneratingSequence& gen,
                            std::size_t i, std::size_t j);

/// n x n block of matrix_entry_oracle, sharing one Gram-Schmidt run.
ComplexMatrix matrix_oracle(const MomentTable& table, const GeneratingSequence& gen,
                            std::size_t n);

}  // namespace snake
