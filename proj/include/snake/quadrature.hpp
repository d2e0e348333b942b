#pragma once

#include <cstddef>
#include <vector>

#include "snake/laurent.hpp"
#include "snake/linalg.hpp"
#include "snake/snake.hpp"

namespace snake {

/// n x n unitary product of G_{0,1}..G_{n-2,n-1} in snake order, where
/// G_{n-2,n-1} has absorbed the phase e^{i theta} of the decoupled factor
/// G_{n-1,n} = diag(e^{i theta}, e^{i theta~}).
struct ParaUnitaryTruncation {
    std::size_t n = 0;
    double theta = 0.0;
    ComplexMatrix matrix;
    // The modified (non-canonical) last factor, kept for inspection.
    GivensFactor absorbed;
};

/// Requires n >= 2, snake.factor_count() >= n - 1 and shape bits through s_{n-1}.
ParaUnitaryTruncation truncate_para_unitary(const SnakeFactorization& snake, std::size_t n,
                                            double theta);

/// Leading n x n block of the infinite snake matrix, built like the
/// para-unitary truncation with conj(alpha_{n-1}) in place of e^{i theta}.
/// Requires snake.factor_count() >= n.
ComplexMatrix principal_truncation(const SnakeFactorization& snake, std::size_t n);

struct UnitaryEigen {
    std::vector<Complex> values;
    // Orthonormal eigenvectors as columns; the first nonzero component of
    // each is real and nonnegative.
    ComplexMatrix vectors;
};

/// Complex Schur decomposition of a unitary matrix (n <= 256). For a normal
/// input the triangular factor is diagonal, so the Schur vectors are
/// eigenvectors. Throws ValidationError on non-unitary input (defect > 1e-10)
/// and NumericalError when the iteration does not converge.
UnitaryEigen eigen_unitary(const ComplexMatrix& matrix);

struct QuadratureRule {
    std::vector<Complex> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Nodes and weights sorted by principal argument in [-pi, pi).
void sort_rule(QuadratureRule& rule);

/// Nodes are the eigenvalues of the para-unitary truncation; weights are the
/// squared moduli of the first eigenvector components. Exact on
/// span{z^j : |j| <= n - 1} for the measure with the snake's Schur parameters.
QuadratureRule szego_quadrature(const SnakeFactorization& snake, std::size_t n, double theta);

/// sum_j w_j f(z_j)
Complex apply_rule(const QuadratureRule& rule, const LaurentPoly& f);

}  // namespace snake
