#include "snake/linalg.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace snake {

double unitarity_defect(const ComplexMatrix& a) {
    const ComplexMatrix gram = a * a.adjoint();
    const ComplexMatrix id = ComplexMatrix::Identity(a.rows(), a.rows());
    return (gram - id).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

double principal_arg(Complex z, double snap) {
    double arg = std::arg(z);
    if (arg >= std::numbers::pi - snap) arg -= 2.0 * std::numbers::pi;
    return arg;
}

}  // namespace snake
