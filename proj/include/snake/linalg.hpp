#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace snake {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Block2 = Eigen::Matrix2cd;

// max_{ij} |(A A^H - I)_{ij}|
double unitarity_defect(const ComplexMatrix& a);

// max_{ij} |A_{ij} - B_{ij}|; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Principal argument folded into [-pi, pi). Values within `snap` of +pi are
// mapped to -pi so that points on the negative real axis sort consistently.
double principal_arg(Complex z, double snap = 1e-12);

}  // namespace snake
