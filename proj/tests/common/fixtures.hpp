#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "snake/schur.hpp"
#include "snake/snake.hpp"

namespace fixtures {

using snake::Complex;

// s = (1,0,1,0,0,1,1,0,0): the monomial order 1, z^-1, z, z^-2, z^2, z^3, z^-3, z^-4, z^4, z^5.
inline snake::GeneratingSequence mixed_shape() {
    return snake::GeneratingSequence({1, 0, 1, 0, 0, 1, 1, 0, 0});
}

// Symbolic entry written as space-separated factors: "aK" is alpha_K, "aKc" its
// conjugate, "rK" is rho_K, a leading '-' negates, "0" is zero.
inline Complex symbolic(const std::string& term, const snake::SchurSequence& s) {
    if (term == "0") return 0.0;
    Complex value = 1.0;
    std::string body = term;
    if (!body.empty() && body[0] == '-') {
        value = -1.0;
        body.erase(0, 1);
    }
    std::istringstream in(body);
    std::string f;
    while (in >> f) {
        const bool conj = f.back() == 'c';
        const auto k = static_cast<std::size_t>(std::stoul(f.substr(1, f.size() - 1 - (conj ? 1 : 0))));
        if (f[0] == 'r') {
            value *= s.rho(k);
        } else if (f[0] == 'a') {
            value *= conj ? std::conj(s.alpha(k)) : s.alpha(k);
        } else {
            throw std::invalid_argument("bad factor " + f);
        }
    }
    return value;
}

using Table = std::vector<std::vector<std::string>>;

// Full expansion of the mixed snake, rows 0..8, columns 0..7.
inline const Table& mixed_table() {
    static const Table t = {
        {"a0c", "r0", "0", "0", "0", "0", "0", "0"},
        {"r0 a1c", "-a0 a1c", "r1 a2c", "r1 r2", "0", "0", "0", "0"},
        {"r0 r1", "-a0 r1", "-a1 a2c", "-a1 r2", "0", "0", "0", "0"},
        {"0", "0", "r2 a3c", "-a2 a3c", "r3 a4c", "r3 r4 a5c", "r3 r4 r5", "0"},
        {"0", "0", "r2 r3", "-a2 r3", "-a3 a4c", "-a3 r4 a5c", "-a3 r4 r5", "0"},
        {"0", "0", "0", "0", "r4", "-a4 a5c", "-a4 r5", "0"},
        {"0", "0", "0", "0", "0", "r5 a6c", "-a5 a6c", "r6"},
        {"0", "0", "0", "0", "0", "r5 r6 a7c", "-a5 r6 a7c", "-a6 a7c"},
        {"0", "0", "0", "0", "0", "r5 r6 r7", "-a5 r6 r7", "-a6 r7"},
    };
    return t;
}

// Five-diagonal (CMV) matrix, displayed rows 0..6 and columns 0..6.
inline const Table& cmv_table() {
    static const Table t = {
        {"a0c", "r0 a1c", "r0 r1", "0", "0", "0", "0"},
        {"r0", "-a0 a1c", "-a0 r1", "0", "0", "0", "0"},
        {"0", "r1 a2c", "-a1 a2c", "r2 a3c", "r2 r3", "0", "0"},
        {"0", "r1 r2", "-a1 r2", "-a2 a3c", "-a2 r3", "0", "0"},
        {"0", "0", "0", "r3 a4c", "-a3 a4c", "r4 a5c", "r4 r5"},
        {"0", "0", "0", "r3 r4", "-a3 r4", "-a4 a5c", "-a4 r5"},
        {"0", "0", "0", "0", "0", "r5 a6c", "-a5 a6c"},
    };
    return t;
}

// Unitary Hessenberg matrix, rows and columns 0..5.
inline const Table& hessenberg_table() {
    static const Table t = {
        {"a0c", "r0 a1c", "r0 r1 a2c", "r0 r1 r2 a3c", "r0 r1 r2 r3 a4c", "r0 r1 r2 r3 r4 a5c"},
        {"r0", "-a0 a1c", "-a0 r1 a2c", "-a0 r1 r2 a3c", "-a0 r1 r2 r3 a4c", "-a0 r1 r2 r3 r4 a5c"},
        {"0", "r1", "-a1 a2c", "-a1 r2 a3c", "-a1 r2 r3 a4c", "-a1 r2 r3 r4 a5c"},
        {"0", "0", "r2", "-a2 a3c", "-a2 r3 a4c", "-a2 r3 r4 a5c"},
        {"0", "0", "0", "r3", "-a3 a4c", "-a3 r4 a5c"},
        {"0", "0", "0", "0", "r4", "-a4 a5c"},
    };
    return t;
}

// alpha_k = (0.3 + 0.05 k) e^{ik}, clipped to modulus 0.9.
inline snake::SchurSequence spiral_schur(std::size_t n) {
    std::vector<Complex> a(n);
    for (std::size_t k = 0; k < n; ++k) {
        a[k] = std::polar(std::min(0.3 + 0.05 * static_cast<double>(k), 0.9), static_cast<double>(k));
    }
    return snake::SchurSequence(std::move(a));
}

// Uniform in the disk of radius rmax; nonzero by rejection of tiny draws.
inline Complex random_alpha(std::mt19937_64& rng, double rmax) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const Complex z(u(rng), u(rng));
        const double r = std::abs(z);
        if (r <= 1.0 && r > 1e-3) return rmax * z;
    }
}

inline snake::SchurSequence random_schur(std::mt19937_64& rng, std::size_t n, double rmax = 0.9) {
    std::vector<Complex> a(n);
    for (auto& x : a) x = random_alpha(rng, rmax);
    return snake::SchurSequence(std::move(a));
}

inline snake::GeneratingSequence random_shape(std::mt19937_64& rng, std::size_t m) {
    std::bernoulli_distribution coin(0.5);
    std::vector<std::uint8_t> bits(m);
    for (auto& b : bits) b = coin(rng) ? 1 : 0;
    return snake::GeneratingSequence(std::move(bits));
}

}  // namespace fixtures
