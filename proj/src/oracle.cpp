#include "snake/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "snake/error.hpp"

namespace snake {

MeasureSpec MeasureSpec::bernstein_szego(SchurSequence prefix) {
    return MeasureSpec(BernsteinSzego{std::move(prefix)});
}

MeasureSpec MeasureSpec::geronimus(Complex a, std::size_t length) {
    if (!(std::norm(a) < 1.0)) throw InvalidSchurParameter(0);
    if (length == 0) throw ValidationError("Geronimus truncation length must be positive");
    return MeasureSpec(Geronimus{a, length});
}

MeasureSpec MeasureSpec::grid(const std::vector<std::pair<double, double>>& points) {
    if (points.empty()) throw ValidationError("grid measure needs at least one point");
    Grid g;
    double mass = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto [theta, w] = points[k];
        if (!(theta >= -std::numbers::pi && theta < std::numbers::pi)) {
            throw ValidationError("grid point " + std::to_string(k) + " has theta outside [-pi, pi)");
        }
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw ValidationError("grid point " + std::to_string(k) + " has non-positive weight");
        }
        g.theta.push_back(theta);
        g.weight.push_back(w);
        mass += w;
    }
    for (double& w : g.weight) w /= mass;
    return MeasureSpec(std::move(g));
}

std::optional<SchurSequence> MeasureSpec::schur_parameters(std::size_t count) const {
    struct Visitor {
        std::size_t count;
        std::optional<SchurSequence> operator()(const Lebesgue&) const {
            return SchurSequence(std::vector<Complex>(count, Complex(0.0)));
        }
        std::optional<SchurSequence> operator()(const BernsteinSzego& m) const {
            return m.prefix.resized(count);
        }
        std::optional<SchurSequence> operator()(const Geronimus& m) const {
            std::vector<Complex> out(count, Complex(0.0));
            for (std::size_t k = 0; k < count && k < m.length; ++k) out[k] = m.a;
            return SchurSequence(std::move(out));
        }
        std::optional<SchurSequence> operator()(const Grid&) const { return std::nullopt; }
    };
    return std::visit(Visitor{count}, v_);
}

MomentTable::MomentTable(std::vector<Complex> values) : values_(std::move(values)) {
    if (values_.empty()) values_.push_back(1.0);
    values_[0] = 1.0;
}

Complex MomentTable::mu(long j) const {
    const auto a = static_cast<std::size_t>(j < 0 ? -j : j);
    if (a >= values_.size()) {
        throw IndexError("moment " + std::to_string(j) + " is outside the table range +-" +
                         std::to_string(jmax()));
    }
    return j < 0 ? std::conj(values_[a]) : values_[a];
}

ComplexMatrix MomentTable::toeplitz(std::size_t n) const {
    const auto dim = static_cast<Eigen::Index>(n + 1);
    ComplexMatrix t(dim, dim);
    for (Eigen::Index a = 0; a < dim; ++a) {
        for (Eigen::Index b = 0; b < dim; ++b) t(a, b) = mu(static_cast<long>(a - b));
    }
    return t;
}

bool MomentTable::positive_definite(std::size_t n) const {
    const Eigen::LDLT<ComplexMatrix> ldlt(toeplitz(n));
    if (ldlt.info() != Eigen::Success) return false;
    const Eigen::VectorXd d = ldlt.vectorD().real();
    return (d.array() > 0.0).all();
}

namespace {

constexpr double kMomentTolerance = 1e-11;
constexpr std::size_t kMinGrid = 4096;
constexpr std::size_t kMaxGrid = std::size_t{1} << 20;

// Trapezoid moments of a smooth periodic density sampled at theta_k = 2 pi k / M.
std::vector<Complex> trapezoid_moments(const SchurSequence& prefix, std::size_t grid,
                                       std::size_t jmax) {
    std::vector<Complex> roots(grid);
    for (std::size_t k = 0; k < grid; ++k) {
        roots[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                                       static_cast<double>(grid));
    }
    std::vector<Complex> out(jmax + 1, Complex(0.0));
    for (std::size_t k = 0; k < grid; ++k) {
        const Complex z = std::conj(roots[k]);
        const double density = 1.0 / std::norm(evaluate_phi(prefix, prefix.size(), z).first);
        for (std::size_t j = 0; j <= jmax; ++j) out[j] += density * roots[(j * k) % grid];
    }
    for (auto& v : out) v /= static_cast<double>(grid);
    return out;
}

std::vector<Complex> density_moments(const SchurSequence& prefix, std::size_t jmax) {
    std::size_t grid = kMinGrid;
    while (grid < 8 * (jmax + 1)) grid *= 2;
    std::vector<Complex> coarse = trapezoid_moments(prefix, grid, jmax);
    while (grid < kMaxGrid) {
        grid *= 2;
        std::vector<Complex> fine = trapezoid_moments(prefix, grid, jmax);
        double diff = 0.0;
        for (std::size_t j = 0; j <= jmax; ++j) diff = std::max(diff, std::abs(fine[j] - coarse[j]));
        if (diff <= kMomentTolerance * std::abs(fine[0])) {
            const Complex mass = fine[0];
            for (auto& v : fine) v /= mass;
            return fine;
        }
        coarse = std::move(fine);
    }
    throw NumericalError("moment integration did not converge on grids up to " +
                         std::to_string(kMaxGrid) + " points");
}

// The measure with density 1/|phi_n|^2 makes phi_k orthogonal to 1 for k <= n and
// z^{k-n} phi_n orthogonal to 1 beyond; each condition fixes the next moment.
std::vector<Complex> recurrence_moments(const SchurSequence& prefix, std::size_t jmax) {
    std::vector<Complex> out(jmax + 1, Complex(0.0));
    out[0] = 1.0;
    PolynomialPair pair = PolynomialPair::unit();
    for (std::size_t j = 1; j <= jmax; ++j) {
        if (j <= prefix.size()) pair = szego_step(pair, prefix.alpha(j - 1));
        const std::size_t d = pair.degree();
        const std::size_t shift = j - d;
        Complex acc = 0.0;
        for (std::size_t i = 0; i < d; ++i) acc += pair.phi[i] * std::conj(out[i + shift]);
        out[j] = std::conj(-acc / pair.phi[d]);
    }
    return out;
}

std::vector<Complex> lebesgue_moments(std::size_t jmax) {
    std::vector<Complex> out(jmax + 1, Complex(0.0));
    out[0] = 1.0;
    return out;
}

std::vector<Complex> grid_moments(const Grid& m, std::size_t jmax) {
    std::vector<Complex> out(jmax + 1, Complex(0.0));
    for (std::size_t k = 0; k < m.theta.size(); ++k) {
        for (std::size_t j = 0; j <= jmax; ++j) {
            out[j] += m.weight[k] * std::polar(1.0, -static_cast<double>(j) * m.theta[k]);
        }
    }
    return out;
}

SchurSequence geronimus_prefix(const Geronimus& m) {
    return SchurSequence(std::vector<Complex>(m.length, m.a));
}

}  // namespace

MomentTable moments(const MeasureSpec& measure, std::size_t jmax) {
    struct Visitor {
        std::size_t jmax;
        std::vector<Complex> operator()(const Lebesgue&) const { return lebesgue_moments(jmax); }
        std::vector<Complex> operator()(const BernsteinSzego& m) const {
            return recurrence_moments(m.prefix, jmax);
        }
        std::vector<Complex> operator()(const Geronimus& m) const {
            return recurrence_moments(geronimus_prefix(m), jmax);
        }
        std::vector<Complex> operator()(const Grid& m) const { return grid_moments(m, jmax); }
    };
    return MomentTable(std::visit(Visitor{jmax}, measure.variant()));
}

MomentTable quadrature_moments(const MeasureSpec& measure, std::size_t jmax) {
    struct Visitor {
        std::size_t jmax;
        std::vector<Complex> operator()(const Lebesgue&) const { return lebesgue_moments(jmax); }
        std::vector<Complex> operator()(const BernsteinSzego& m) const {
            return density_moments(m.prefix, jmax);
        }
        std::vector<Complex> operator()(const Geronimus& m) const {
            return density_moments(geronimus_prefix(m), jmax);
        }
        std::vector<Complex> operator()(const Grid& m) const { return grid_moments(m, jmax); }
    };
    return MomentTable(std::visit(Visitor{jmax}, measure.variant()));
}

Complex inner_product(const MomentTable& table, const LaurentPoly& f, const LaurentPoly& g) {
    if (f.empty() || g.empty()) return 0.0;
    const long span = std::max<long>(f.high() - g.low, g.high() - f.low);
    if (span > static_cast<long>(table.jmax())) {
        throw IndexError("inner product needs moments up to " + std::to_string(span) +
                         " but the table stops at " + std::to_string(table.jmax()));
    }
    Complex acc = 0.0;
    for (int a = f.low; a <= f.high(); ++a) {
        const Complex fa = std::conj(f.coeff(a));
        if (fa == Complex(0.0)) continue;
        Complex row = 0.0;
        for (int b = g.low; b <= g.high(); ++b) row += g.coeff(b) * table.mu(a - b);
        acc += fa * row;
    }
    return acc;
}

namespace {

// Coefficients of v over [low, high], with v -= c * psi.
void axpy(LaurentPoly& v, Complex c, const LaurentPoly& psi) {
    for (int e = psi.low; e <= psi.high(); ++e) {
        v.coeffs[static_cast<std::size_t>(e - v.low)] -= c * psi.coeff(e);
    }
}

// Upper bound on the rounding error of <v, v>, relative scale.
double quadratic_form_scale(const MomentTable& table, const LaurentPoly& v) {
    double acc = 0.0;
    for (int a = v.low; a <= v.high(); ++a) {
        for (int b = v.low; b <= v.high(); ++b) {
            acc += std::abs(v.coeff(a)) * std::abs(v.coeff(b)) * std::abs(table.mu(a - b));
        }
    }
    return acc;
}

}  // namespace

std::vector<LaurentPoly> gram_schmidt_laurent(const MomentTable& table,
                                              const GeneratingSequence& gen, std::size_t n) {
    if (n > gen.size()) {
        throw IndexError("Gram-Schmidt to index " + std::to_string(n) + " needs " +
                         std::to_string(n) + " shape bits");
    }
    const std::vector<int> r = gen.exponents();
    std::vector<LaurentPoly> basis;
    basis.reserve(n + 1);
    int lo = 0;
    int hi = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        lo = std::min(lo, r[k]);
        hi = std::max(hi, r[k]);
        LaurentPoly v{lo, std::vector<Complex>(static_cast<std::size_t>(hi - lo + 1), Complex(0.0))};
        v.coeffs[static_cast<std::size_t>(r[k] - lo)] = 1.0;

        for (int pass = 0; pass < 2; ++pass) {
            for (const LaurentPoly& psi : basis) axpy(v, inner_product(table, psi, v), psi);
        }
        const double norm2 = inner_product(table, v, v).real();
        const double scale = quadratic_form_scale(table, v);
        if (!(norm2 > std::numeric_limits<double>::epsilon() * scale)) {
            throw NumericalError("numerically singular Gram matrix at Gram-Schmidt step " +
                                 std::to_string(k));
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& c : v.coeffs) c *= inv;
        basis.push_back(std::move(v));
    }
    return basis;
}

SchurSequence schur_from_moments(const MomentTable& table, std::size_t n) {
    if (table.jmax() < n + 1) {
        throw IndexError("recovering " + std::to_string(n) + " Schur parameters needs moments up to " +
                         std::to_string(n + 1));
    }
    if (!table.positive_definite(n)) {
        throw NumericalError("moment Toeplitz matrix is not positive definite at size " +
                             std::to_string(n + 1));
    }
    const std::vector<LaurentPoly> phis =
        gram_schmidt_laurent(table, GeneratingSequence::hessenberg(n), n);
    std::vector<Complex> alphas(n);
    for (std::size_t k = 0; k < n; ++k) {
        const LaurentPoly& next = phis[k + 1];
        const double kappa = next.coeff(static_cast<int>(k) + 1).real();
        alphas[k] = std::conj(-next.coeff(0) / kappa);
        if (!(std::norm(alphas[k]) < 1.0)) {
            throw NumericalError("recovered Schur parameter " + std::to_string(k) +
                                 " left the unit disk");
        }
    }
    return SchurSequence(std::move(alphas));
}

Complex matrix_entry_oracle(const MomentTable& table, const GeneratingSequence& gen,
                            std::size_t i, std::size_t j) {
    const std::vector<LaurentPoly> basis = gram_schmidt_laurent(table, gen, std::max(i, j));
    return inner_product(table, basis[i], basis[j].shifted(1));
}

ComplexMatrix matrix_oracle(const MomentTable& table, const GeneratingSequence& gen,
                            std::size_t n) {
    if (n == 0) return ComplexMatrix(0, 0);
    const std::vector<LaurentPoly> basis = gram_schmidt_laurent(table, gen, n - 1);
    const auto dim = static_cast<Eigen::Index>(n);
    ComplexMatrix out(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            out(i, j) = inner_product(table, basis[static_cast<std::size_t>(i)],
                                      basis[static_cast<std::size_t>(j)].shifted(1));
        }
    }
    return out;
}

}  // namespace snake
