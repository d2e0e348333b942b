#pragma once

#include <vector>

#include "snake/linalg.hpp"

namespace snake {

// Laurent polynomial sum_k coeffs[k] * z^(low + k).
struct LaurentPoly {
    int low = 0;
    std::vector<Complex> coeffs;

    static LaurentPoly monomial(int exponent, Complex c = 1.0);
    static LaurentPoly constant(Complex c) { return monomial(0, c); }

    bool empty() const { return coeffs.empty(); }
    int high() const { return low + static_cast<int>(coeffs.size()) - 1; }
    // Zero outside [low, high].
    Complex coeff(int exponent) const;

    // z * p(z)
    LaurentPoly shifted(int by) const;

    // Requires z != 0 when low < 0.
    Complex operator()(Complex z) const;
};

}  // namespace snake
