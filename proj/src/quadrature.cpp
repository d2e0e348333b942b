#include "snake/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "snake/error.hpp"

namespace snake {

namespace {

void check_truncation_size(const SnakeFactorization& snake, std::size_t n, std::size_t factors) {
    if (n < 2) throw ValidationError("truncation size must be at least 2");
    if (snake.factor_count() < factors) {
        throw IndexError("truncation of size " + std::to_string(n) + " needs " +
                         std::to_string(factors) + " Schur parameters but the snake has " +
                         std::to_string(snake.factor_count()));
    }
    if (snake.gen().size() < n - 1) {
        throw IndexError("truncation of size " + std::to_string(n) + " needs shape bits through s_" +
                         std::to_string(n - 1));
    }
}

// Product of G_{0,1}..G_{n-2,n-1} in snake order with diag(1, corner) folded
// into G_{n-2,n-1}: on its right when s_{n-1} = 0, on its left when s_{n-1} = 1.
ComplexMatrix broken_snake(const SnakeFactorization& snake, std::size_t n, Complex corner,
                           GivensFactor* absorbed_out) {
    const std::size_t last = n - 2;
    GivensFactor absorbed = snake.factor(last);
    Block2 phase = Block2::Identity();
    phase(1, 1) = corner;
    absorbed.block = snake.gen().s(n - 1) == 0 ? Block2(absorbed.block * phase)
                                               : Block2(phase * absorbed.block);
    absorbed.canonical = false;

    std::vector<GivensFactor> ordered;
    for (std::size_t k : snake.order()) {
        if (k < last) ordered.push_back(snake.factor(k));
        if (k == last) ordered.push_back(absorbed);
    }
    if (absorbed_out != nullptr) *absorbed_out = absorbed;
    return multiply_factors(n, ordered);
}

}  // namespace

ParaUnitaryTruncation truncate_para_unitary(const SnakeFactorization& snake, std::size_t n,
                                            double theta) {
    check_truncation_size(snake, n, n - 1);
    ParaUnitaryTruncation out;
    out.n = n;
    out.theta = theta;
    out.matrix = broken_snake(snake, n, std::polar(1.0, theta), &out.absorbed);
    return out;
}

ComplexMatrix principal_truncation(const SnakeFactorization& snake, std::size_t n) {
    check_truncation_size(snake, n, n);
    return broken_snake(snake, n, std::conj(snake.schur().alpha(n - 1)), nullptr);
}

UnitaryEigen eigen_unitary(const ComplexMatrix& matrix) {
    if (matrix.rows() != matrix.cols()) throw ValidationError("eigen_unitary needs a square matrix");
    if (matrix.rows() > 256) throw ValidationError("eigen_unitary is limited to n <= 256");
    const double defect = unitarity_defect(matrix);
    if (!(defect <= 1e-10)) {
        throw ValidationError("matrix is not unitary (defect " + std::to_string(defect) + ")");
    }

    Eigen::ComplexSchur<ComplexMatrix> schur(matrix.rows());
    schur.setMaxIterations(60 * static_cast<Eigen::Index>(std::max<Eigen::Index>(matrix.rows(), 1)));
    schur.compute(matrix);
    if (schur.info() != Eigen::Success) {
        throw NumericalError("complex Schur iteration did not converge");
    }

    UnitaryEigen out;
    const ComplexMatrix& t = schur.matrixT();
    out.vectors = schur.matrixU();
    out.values.resize(static_cast<std::size_t>(t.rows()));
    for (Eigen::Index k = 0; k < t.rows(); ++k) {
        out.values[static_cast<std::size_t>(k)] = t(k, k);
        auto column = out.vectors.col(k);
        for (Eigen::Index r = 0; r < column.size(); ++r) {
            const double mag = std::abs(column(r));
            if (mag > 1e-300) {
                column *= std::conj(column(r)) / mag;
                column(r) = mag;
                break;
            }
        }
    }
    return out;
}

void sort_rule(QuadratureRule& rule) {
    std::vector<std::size_t> idx(rule.nodes.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return principal_arg(rule.nodes[a]) < principal_arg(rule.nodes[b]);
    });
    QuadratureRule sorted;
    for (std::size_t k : idx) {
        sorted.nodes.push_back(rule.nodes[k]);
        sorted.weights.push_back(rule.weights[k]);
    }
    rule = std::move(sorted);
}

QuadratureRule szego_quadrature(const SnakeFactorization& snake, std::size_t n, double theta) {
    const ParaUnitaryTruncation trunc = truncate_para_unitary(snake, n, theta);
    const UnitaryEigen eig = eigen_unitary(trunc.matrix);
    QuadratureRule rule;
    rule.nodes = eig.values;
    for (Eigen::Index k = 0; k < eig.vectors.cols(); ++k) {
        rule.weights.push_back(std::norm(eig.vectors(0, k)));
    }
    sort_rule(rule);
    return rule;
}

Complex apply_rule(const QuadratureRule& rule, const LaurentPoly& f) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) acc += rule.weights[k] * f(rule.nodes[k]);
    return acc;
}

}  // namespace snake
