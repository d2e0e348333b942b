#include "verify.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <random>

#include "snake/error.hpp"
#include "snake/expand.hpp"
#include "snake/quadrature.hpp"

namespace snake::verify {

namespace {

Complex random_alpha(std::mt19937_64& rng, double rmax) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const Complex z(u(rng), u(rng));
        const double r = std::abs(z);
        if (r <= 1.0 && r > 1e-3) return rmax * z;
    }
}

SchurSequence random_schur(std::mt19937_64& rng, std::size_t n, double rmax = 0.9) {
    std::vector<Complex> a(n);
    for (auto& x : a) x = random_alpha(rng, rmax);
    return SchurSequence(std::move(a));
}

GeneratingSequence random_shape(std::mt19937_64& rng, std::size_t m) {
    std::bernoulli_distribution coin(0.5);
    std::vector<std::uint8_t> bits(m);
    for (auto& b : bits) b = coin(rng) ? 1 : 0;
    return GeneratingSequence(std::move(bits));
}

GeneratingSequence mixed_shape(std::size_t m) {
    const std::vector<std::uint8_t> base = {1, 0, 1, 0, 0, 1, 1, 0, 0};
    std::vector<std::uint8_t> bits(m);
    for (std::size_t k = 0; k < m; ++k) bits[k] = base[k % base.size()];
    return GeneratingSequence(std::move(bits));
}

std::string bits_text(const GeneratingSequence& g) {
    std::string s;
    for (std::uint8_t b : g.bits()) s += static_cast<char>('0' + b);
    return s;
}

struct NamedMeasure {
    std::string name;
    MeasureSpec measure;
};

std::vector<NamedMeasure> measures_for(const Config& config) {
    if (config.measure) return {{"configured", *config.measure}};
    return {{"lebesgue", MeasureSpec::lebesgue()},
            {"bs[0.6]", MeasureSpec::bernstein_szego(SchurSequence({0.6}))},
            {"bs[0.5,-0.4i,0.2]",
             MeasureSpec::bernstein_szego(SchurSequence({0.5, Complex(0, -0.4), 0.2}))}};
}

Row make_row(std::string suite, std::string name, double error, double tol, std::string detail = {}) {
    return Row{std::move(suite), std::move(name), error, tol, error <= tol, std::move(detail)};
}

std::vector<Row> oracle_suite(const Config& config) {
    std::mt19937_64 rng(config.seed);
    const std::size_t n = 11;
    std::vector<std::pair<std::string, GeneratingSequence>> shapes = {
        {"hessenberg", GeneratingSequence::hessenberg(n)},
        {"cmv", GeneratingSequence::cmv(n)},
        {"mixed", mixed_shape(n)}};
    for (int k = 0; k < 3; ++k) {
        GeneratingSequence g = random_shape(rng, n);
        shapes.emplace_back("random " + bits_text(g), g);
    }
    std::vector<Row> rows;
    for (const auto& m : measures_for(config)) {
        const MomentTable table = moments(m.measure, 2 * n + 4);
        const SchurSequence schur = schur_for(m.measure, n + 1);
        for (const auto& [name, g] : shapes) {
            const SnakeFactorization s(schur, g);
            const double err = max_abs_diff(matrix_oracle(table, g, n), expand_dense(s, n));
            rows.push_back(make_row("oracle", m.name + " x " + name, err, 1e-9));
        }
    }
    return rows;
}

std::vector<Row> unitarity_suite(const Config& config) {
    std::mt19937_64 rng(config.seed);
    std::vector<Row> rows;
    for (std::size_t m : {8u, 32u, 127u}) {
        double worst = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const SnakeFactorization s(random_schur(rng, m + 1), random_shape(rng, m));
            worst = std::max(worst, unitarity_defect(materialize_window(s, m)));
        }
        rows.push_back(make_row("unitarity", "window m=" + std::to_string(m), worst, 1e-13));
    }
    for (std::size_t n : {4u, 16u, 64u}) {
        double worst = 0.0;
        for (double theta : {0.0, 0.7, std::numbers::pi / 3, 2.1}) {
            const SnakeFactorization s(random_schur(rng, n - 1), random_shape(rng, n - 1));
            worst = std::max(worst, unitarity_defect(truncate_para_unitary(s, n, theta).matrix));
        }
        rows.push_back(make_row("unitarity", "truncation n=" + std::to_string(n), worst, 1e-12));
    }
    return rows;
}

// Structural bandwidths against those measured on a dense expansion with
// nonzero parameters. One extra bit fixes the last column's segment.
bool bandwidth_matches(std::mt19937_64& rng, const GeneratingSequence& g, Bandwidths* measured) {
    std::vector<std::uint8_t> bits(g.bits().begin(), g.bits().end());
    bits.push_back(0);
    const GeneratingSequence extended(bits);
    const std::size_t dim = g.size() + 2;
    const SnakeFactorization s(random_schur(rng, dim), extended);
    *measured = measured_bandwidths(expand_dense(s, dim));
    return *measured == bandwidths(g);
}

std::vector<Row> bandwidth_suite(const Config& config) {
    std::mt19937_64 rng(config.seed);
    const std::size_t m = config.m;
    if (m == 0) throw ValidationError("bandwidth suite needs --m >= 1");
    std::vector<std::pair<std::string, GeneratingSequence>> shapes = {
        {"hessenberg", GeneratingSequence::hessenberg(m)},
        {"cmv", GeneratingSequence::cmv(m)},
        {"mixed", mixed_shape(m)}};
    for (int k = 0; k < 5; ++k) {
        GeneratingSequence g = random_shape(rng, m);
        shapes.emplace_back("random " + bits_text(g), g);
    }
    std::vector<Row> rows;
    for (const auto& [name, g] : shapes) {
        Bandwidths measured;
        const bool ok = bandwidth_matches(rng, g, &measured);
        const Bandwidths structural = bandwidths(g);
        char detail[96];
        std::snprintf(detail, sizeof detail, "structural (%zu,%zu) measured (%zu,%zu)", structural.lower,
                      structural.upper, measured.lower, measured.upper);
        rows.push_back(make_row("bandwidth", name, ok ? 0.0 : 1.0, 0.0, detail));
    }
    if (m <= 14) {
        std::size_t mismatches = 0;
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<std::uint8_t> bits(m);
            for (std::size_t k = 0; k < m; ++k) bits[k] = (mask >> k) & 1u;
            Bandwidths measured;
            if (!bandwidth_matches(rng, GeneratingSequence(bits), &measured)) ++mismatches;
        }
        rows.push_back(make_row("bandwidth", "all " + std::to_string(1u << m) + " shapes",
                                static_cast<double>(mismatches), 0.0,
                                std::to_string(mismatches) + " mismatches"));
    }
    return rows;
}

std::vector<Row> round_trip_suite(const Config& config) {
    std::mt19937_64 rng(config.seed);
    std::vector<Row> rows;
    for (std::size_t len = 1; len <= 12; ++len) {
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const SchurSequence a = random_schur(rng, len, 0.9);
            const SchurSequence r =
                schur_from_moments(moments(MeasureSpec::bernstein_szego(a), len + 1), len);
            for (std::size_t k = 0; k < len; ++k) worst = std::max(worst, std::abs(a.alpha(k) - r.alpha(k)));
        }
        rows.push_back(make_row("round-trip", "length " + std::to_string(len), worst, 1e-8));
    }
    return rows;
}

std::vector<Row> exactness_suite(const Config& config) {
    std::mt19937_64 rng(config.seed);
    std::vector<Row> rows;
    for (const auto& m : measures_for(config)) {
        for (std::size_t n : {4u, 8u, 16u}) {
            const MomentTable table = moments(m.measure, n);
            const SchurSequence schur = schur_for(m.measure, n - 1);
            double worst = 0.0;
            double placement = 0.0;
            for (double theta : {0.0, 0.7}) {
                const SnakeFactorization s(schur, random_shape(rng, n - 1));
                const QuadratureRule rule = szego_quadrature(s, n, theta);
                double total = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    placement = std::max(placement, std::abs(std::abs(rule.nodes[k]) - 1.0));
                    if (!(rule.weights[k] > 0.0)) placement = std::max(placement, 1.0);
                    total += rule.weights[k];
                }
                placement = std::max(placement, std::abs(total - 1.0));
                for (int j = -static_cast<int>(n) + 1; j < static_cast<int>(n); ++j) {
                    const LaurentPoly f = LaurentPoly::monomial(j);
                    worst = std::max(worst, std::abs(apply_rule(rule, f) -
                                                     inner_product(table, LaurentPoly::constant(1.0), f)));
                }
            }
            Row row = make_row("exactness", m.name + " n=" + std::to_string(n), worst, 1e-9);
            char detail[64];
            std::snprintf(detail, sizeof detail, "node/weight defect %.2e", placement);
            row.detail = detail;
            row.pass = row.pass && placement <= 1e-10;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"oracle", "unitarity", "bandwidth", "round-trip",
                                                   "exactness"};
    return names;
}

std::vector<Row> run_suite(const std::string& name, const Config& config) {
    if (name == "oracle") return oracle_suite(config);
    if (name == "unitarity") return unitarity_suite(config);
    if (name == "bandwidth") return bandwidth_suite(config);
    if (name == "round-trip") return round_trip_suite(config);
    if (name == "exactness") return exactness_suite(config);
    throw ValidationError("unknown suite '" + name + "'");
}

void print_table(std::ostream& out, const std::vector<Row>& rows) {
    std::size_t width = 4;
    for (const Row& r : rows) width = std::max(width, r.name.size());
    char line[512];
    std::snprintf(line, sizeof line, "%-10s  %-*s  %10s  %9s  %s\n", "suite", static_cast<int>(width),
                  "case", "max error", "tolerance", "status");
    out << line;
    for (const Row& r : rows) {
        std::snprintf(line, sizeof line, "%-10s  %-*s  %10.3e  %9.1e  %s%s%s\n", r.suite.c_str(),
                      static_cast<int>(width), r.name.c_str(), r.error, r.tolerance,
                      r.pass ? "PASS" : "FAIL", r.detail.empty() ? "" : "  ", r.detail.c_str());
        out << line;
    }
    const auto failed = std::count_if(rows.begin(), rows.end(), [](const Row& r) { return !r.pass; });
    out << rows.size() - static_cast<std::size_t>(failed) << "/" << rows.size() << " cases passed\n";
}

SchurSequence schur_for(const MeasureSpec& measure, std::size_t count) {
    if (auto known = measure.schur_parameters(count)) return *known;
    return schur_from_moments(moments(measure, count + 1), count);
}

}  // namespace snake::verify
