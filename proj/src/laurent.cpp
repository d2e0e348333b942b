#include "snake/laurent.hpp"

#include <cmath>

#include "snake/error.hpp"

namespace snake {

LaurentPoly LaurentPoly::monomial(int exponent, Complex c) {
    return LaurentPoly{exponent, {c}};
}

Complex LaurentPoly::coeff(int exponent) const {
    if (exponent < low || exponent > high()) return 0.0;
    return coeffs[static_cast<std::size_t>(exponent - low)];
}

LaurentPoly LaurentPoly::shifted(int by) const {
    return LaurentPoly{low + by, coeffs};
}

Complex LaurentPoly::operator()(Complex z) const {
    if (coeffs.empty()) return 0.0;
    if (low < 0 && z == Complex(0.0)) {
        throw ValidationError("Laurent polynomial with negative powers evaluated at z = 0");
    }
    // Horner on the polynomial part, then scale by z^low.
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc * std::pow(z, low);
}

}  // namespace snake
