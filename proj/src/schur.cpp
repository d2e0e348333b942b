#include "snake/schur.hpp"

#include <cmath>

#include "snake/error.hpp"
#include "snake/snake.hpp"

namespace snake {

double complementary(Complex alpha) {
    return std::sqrt(1.0 - std::norm(alpha));
}

SchurSequence::SchurSequence(std::vector<Complex> alphas) : alphas_(std::move(alphas)) {
    for (std::size_t k = 0; k < alphas_.size(); ++k) {
        const double n = std::norm(alphas_[k]);
        // !(n < 1) also catches NaN.
        if (!(n < 1.0) || complementary(alphas_[k]) <= 0.0) throw InvalidSchurParameter(k);
    }
}

double SchurSequence::rho(std::size_t k) const { return complementary(alphas_.at(k)); }

SchurSequence SchurSequence::resized(std::size_t count) const {
    std::vector<Complex> out(count, Complex(0.0));
    for (std::size_t k = 0; k < count && k < alphas_.size(); ++k) out[k] = alphas_[k];
    return SchurSequence(std::move(out));
}

std::vector<Complex> dual(std::span<const Complex> coeffs) {
    std::vector<Complex> out(coeffs.size());
    const std::size_t n = coeffs.size();
    for (std::size_t j = 0; j < n; ++j) out[j] = std::conj(coeffs[n - 1 - j]);
    return out;
}

Complex evaluate_polynomial(std::span<const Complex> coeffs, Complex z) {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

PolynomialPair szego_step(const PolynomialPair& pair, Complex alpha) {
    if (!(std::norm(alpha) < 1.0)) throw InvalidSchurParameter(pair.degree());
    const double rho = complementary(alpha);
    const std::size_t n = pair.phi.size();  // degree k + 1 coefficients

    PolynomialPair next;
    next.phi.assign(n + 1, Complex(0.0));
    next.phi_star.assign(n + 1, Complex(0.0));
    const Complex calpha = std::conj(alpha);
    for (std::size_t j = 0; j <= n; ++j) {
        const Complex z_phi = j >= 1 ? pair.phi[j - 1] : Complex(0.0);
        const Complex star = j < n ? pair.phi_star[j] : Complex(0.0);
        next.phi[j] = (z_phi - calpha * star) / rho;
        next.phi_star[j] = (star - alpha * z_phi) / rho;
    }
    return next;
}

PolynomialPair szego_polynomials(const SchurSequence& schur, std::size_t n) {
    if (n > schur.size()) {
        throw IndexError("degree " + std::to_string(n) + " exceeds the " +
                         std::to_string(schur.size()) + " available Schur parameters");
    }
    PolynomialPair pair = PolynomialPair::unit();
    for (std::size_t k = 0; k < n; ++k) pair = szego_step(pair, schur.alpha(k));
    return pair;
}

std::pair<Complex, Complex> evaluate_phi(const SchurSequence& schur, std::size_t n, Complex z) {
    if (n > schur.size()) {
        throw IndexError("degree " + std::to_string(n) + " exceeds the " +
                         std::to_string(schur.size()) + " available Schur parameters");
    }
    Complex phi = 1.0;
    Complex star = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Complex alpha = schur.alpha(k);
        const double rho = schur.rho(k);
        const Complex next_phi = (z * phi - std::conj(alpha) * star) / rho;
        const Complex next_star = (star - alpha * z * phi) / rho;
        phi = next_phi;
        star = next_star;
    }
    return {phi, star};
}

Complex laurent_basis(const SchurSequence& schur, const GeneratingSequence& gen,
                      std::size_t n, Complex z) {
    if (z == Complex(0.0)) throw ValidationError("Laurent basis is undefined at z = 0");
    if (n > gen.size()) {
        throw IndexError("index " + std::to_string(n) + " exceeds the generating sequence length");
    }
    const auto [phi, star] = evaluate_phi(schur, n, z);
    const Complex scale = std::pow(z, -static_cast<int>(gen.p(n)));
    return scale * (n >= 1 && gen.s(n) == 1 ? star : phi);
}

}  // namespace snake
