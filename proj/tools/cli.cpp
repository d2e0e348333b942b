#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"
#include "snake/error.hpp"
#include "snake/expand.hpp"
#include "verify.hpp"

namespace snake::cli {

namespace {

using io::Json;

struct Options {
    std::string shape;
    std::string s;
    std::string monomials;
    std::string alphas;
    std::string measure;
    std::size_t n = 8;
    double theta = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::string format;
    std::string out;
    bool verify = false;
    std::string suite = "all";
    std::size_t m = 0;
    std::string config;
};

// Config values are either strings or JSON that a flag would carry as text.
std::string config_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_number(); })) {
        std::string joined;
        for (const Json& x : v) joined += (joined.empty() ? "" : ",") + x.dump();
        return joined;
    }
    return v.dump();
}

std::size_t config_size(const Json& v, const std::string& key) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ValidationError("config \"" + key + "\" must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

// Fills options the command line left unset.
void apply_config(const std::string& path, Options& o, const std::map<std::string, CLI::Option*>& flags) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read config file " + path);
    Json cfg;
    try {
        cfg = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError("malformed config file " + path + ": " + e.what());
    }
    if (!cfg.is_object()) throw ValidationError("config file must hold a JSON object");
    const std::map<std::string, std::function<void(const Json&)>> setters = {
        {"shape", [&](const Json& v) { o.shape = config_text(v); }},
        {"s", [&](const Json& v) { o.s = config_text(v); }},
        {"monomials", [&](const Json& v) { o.monomials = config_text(v); }},
        {"alphas", [&](const Json& v) { o.alphas = config_text(v); }},
        {"measure", [&](const Json& v) { o.measure = config_text(v); }},
        {"n", [&](const Json& v) { o.n = config_size(v, "n"); }},
        {"theta",
         [&](const Json& v) {
             if (!v.is_number()) throw ValidationError("config \"theta\" must be a number");
             o.theta = v.get<double>();
         }},
        {"i", [&](const Json& v) { o.i = config_size(v, "i"); }},
        {"j", [&](const Json& v) { o.j = config_size(v, "j"); }},
        {"format", [&](const Json& v) { o.format = config_text(v); }},
        {"out", [&](const Json& v) { o.out = config_text(v); }},
        {"verify",
         [&](const Json& v) {
             if (!v.is_boolean()) throw ValidationError("config \"verify\" must be true or false");
             o.verify = v.get<bool>();
         }},
        {"suite", [&](const Json& v) { o.suite = config_text(v); }},
        {"m", [&](const Json& v) { o.m = config_size(v, "m"); }},
    };
    for (const auto& [key, value] : cfg.items()) {
        const auto setter = setters.find(key);
        if (setter == setters.end()) throw ValidationError("unknown config key \"" + key + "\"");
        if (flags.at(key)->count() == 0) setter->second(value);
    }
}

struct Resolved {
    GeneratingSequence gen;
    bool named = true;
};

Resolved resolve_shape(const Options& o, std::size_t named_bits) {
    const bool has_s = !o.s.empty();
    const bool has_monomials = !o.monomials.empty();
    if (has_s && has_monomials) throw ValidationError("give either --s or --monomials, not both");
    std::string kind = o.shape;
    if (kind.empty()) kind = has_s ? "bits" : has_monomials ? "monomials" : "hessenberg";
    if (kind == "hessenberg" || kind == "cmv") {
        if (has_s || has_monomials) {
            throw ValidationError("--shape " + kind + " conflicts with an explicit --s or --monomials");
        }
        return {kind == "cmv" ? GeneratingSequence::cmv(named_bits) : GeneratingSequence::hessenberg(named_bits),
                true};
    }
    if (kind == "bits") {
        if (!has_s) throw ValidationError("--shape bits needs --s");
        if (has_monomials) throw ValidationError("--shape bits conflicts with --monomials");
        return {GeneratingSequence(io::parse_bit_list(o.s)), false};
    }
    if (kind == "monomials") {
        if (!has_monomials) throw ValidationError("--shape monomials needs --monomials");
        if (has_s) throw ValidationError("--shape monomials conflicts with --s");
        return {GeneratingSequence::from_monomials(io::parse_int_list(o.monomials)), false};
    }
    throw ValidationError("unknown shape '" + kind + "'");
}

std::optional<SchurSequence> inline_alphas(const Options& o) {
    if (!o.alphas.empty() && !o.measure.empty()) {
        throw ValidationError("give either --alphas or --measure, not both");
    }
    if (o.alphas.empty()) return std::nullopt;
    return io::parse_alphas(o.alphas);
}

MeasureSpec measure_of(const Options& o, const std::optional<SchurSequence>& alphas) {
    if (alphas) return MeasureSpec::bernstein_szego(*alphas);
    if (!o.measure.empty()) return io::parse_measure(o.measure);
    return MeasureSpec::lebesgue();
}

// A snake with `wanted` factors unless inline alphas fix the count. Named
// shapes get one bit per factor; explicit shapes are cut to that many bits.
// With pad_alphas the inline alphas are read as a measure whose later
// parameters vanish, so the count stays `wanted`.
SnakeFactorization make_snake(const Options& o, std::size_t wanted, std::size_t named_bits_if_no_alphas,
                              bool pad_alphas = false) {
    const std::optional<SchurSequence> given = inline_alphas(o);
    const std::optional<SchurSequence> alphas = pad_alphas ? std::nullopt : given;
    const std::size_t count = alphas ? alphas->size() : wanted;
    Resolved shape = resolve_shape(o, alphas ? count : named_bits_if_no_alphas);
    if (alphas) {
        if (shape.gen.size() > count) shape.gen = shape.gen.prefix(count);
        return SnakeFactorization(*alphas, shape.gen);
    }
    std::size_t n = count;
    if (!shape.named) {
        n = std::min(n, shape.gen.size() + 1);
        if (shape.gen.size() > n) shape.gen = shape.gen.prefix(n);
    }
    n = std::max<std::size_t>(n, 1);
    return SnakeFactorization(verify::schur_for(measure_of(o, given), n), shape.gen);
}

Json index_list(const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (std::size_t x : v) out.push_back(x);
    return out;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

void require_json(const Options& o, const std::string& command) {
    if (!o.format.empty() && o.format != "json") {
        throw ValidationError(command + " supports --format json only");
    }
}

int cmd_build(const Options& o, std::string& text) {
    require_json(o, "build");
    const std::size_t m = o.m != 0 ? o.m : o.n;
    const Resolved probe = resolve_shape(o, m);
    const std::size_t wanted = probe.named ? m : std::max<std::size_t>(probe.gen.size(), 1);
    const SnakeFactorization snake = make_snake(o, wanted, m);
    Json out = io::emit_shape(snake.gen());
    Json p = Json::array();
    for (std::size_t v : snake.gen().partial_sums()) p.push_back(v);
    out["p"] = p;
    out["left"] = index_list(snake.left());
    out["right"] = index_list(snake.right());
    if (!o.alphas.empty() || !o.measure.empty()) out["alphas"] = io::emit_schur(snake.schur())["alphas"];
    text = dump(out);
    return kSuccess;
}

int cmd_entry(const Options& o, std::string& text) {
    require_json(o, "entry");
    const std::size_t needed = std::max(o.i, o.j) + 1;
    const SnakeFactorization snake = make_snake(o, needed, needed);
    if (std::max(o.i, o.j) >= snake.factor_count() || std::max(o.i, o.j) > snake.gen().size()) {
        throw IndexError("entry (" + std::to_string(o.i) + "," + std::to_string(o.j) +
                         ") is outside the snake's " + std::to_string(snake.factor_count()) + " factors");
    }
    const PathDescriptor p = path(snake.gen(), o.i, o.j);
    Json out;
    out["i"] = o.i;
    out["j"] = o.j;
    out["value"] = io::complex_pair(entry(snake, o.i, o.j));
    out["r"] = p.r;
    out["t"] = p.t;
    out["K"] = index_list(p.inner());
    out["b"] = p.b;
    out["monotone"] = p.monotone;
    text = dump(out);
    return kSuccess;
}

int cmd_expand(const Options& o, std::string& text) {
    if (o.n == 0) throw ValidationError("--n must be positive");
    const SnakeFactorization snake = make_snake(o, o.n, o.n);
    if (snake.factor_count() < o.n || snake.gen().size() + 1 < o.n) {
        throw IndexError("expanding " + std::to_string(o.n) + " rows needs " + std::to_string(o.n) +
                         " factors");
    }
    const ComplexMatrix e = expand_dense(snake, o.n);
    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "i,j,re,im\n";
        char line[96];
        for (Eigen::Index i = 0; i < e.rows(); ++i) {
            for (Eigen::Index j = 0; j < e.cols(); ++j) {
                std::snprintf(line, sizeof line, "%ld,%ld,%.16g,%.16g\n", static_cast<long>(i),
                              static_cast<long>(j), e(i, j).real() + 0.0, e(i, j).imag() + 0.0);
                csv << line;
            }
        }
        text = csv.str();
        return kSuccess;
    }
    require_json(o, "expand");
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < e.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < e.cols(); ++j) row.push_back(io::complex_pair(e(i, j)));
        rows.push_back(row);
    }
    Json out;
    out["n"] = o.n;
    out["s"] = io::emit_shape(snake.gen())["s"];
    out["matrix"] = rows;
    text = dump(out);
    return kSuccess;
}

int cmd_bandwidth(const Options& o, std::string& text) {
    require_json(o, "bandwidth");
    const Resolved shape = resolve_shape(o, o.m != 0 ? o.m : o.n);
    const Bandwidths bw = bandwidths(shape.gen);
    Json out = io::emit_shape(shape.gen);
    out["lower"] = bw.lower;
    out["upper"] = bw.upper;
    text = dump(out);
    return kSuccess;
}

int cmd_quadrature(const Options& o, std::string& text, std::ostream& err) {
    if (o.n < 2) throw ValidationError("--n must be at least 2 for a quadrature rule");
    const SnakeFactorization snake = make_snake(o, o.n - 1, o.n - 1, true);
    const QuadratureRule rule = szego_quadrature(snake, o.n, o.theta);

    std::optional<double> defect;
    if (o.verify) {
        const MeasureSpec measure = measure_of(o, inline_alphas(o));
        const MomentTable table = moments(measure, o.n - 1);
        double worst = 0.0;
        for (int j = 1 - static_cast<int>(o.n); j < static_cast<int>(o.n); ++j) {
            const LaurentPoly f = LaurentPoly::monomial(j);
            worst = std::max(worst, std::abs(apply_rule(rule, f) -
                                             inner_product(table, LaurentPoly::constant(1.0), f)));
        }
        defect = worst;
    }
    if (o.format == "csv") {
        text = io::rule_csv(rule);
        if (defect) {
            char line[64];
            std::snprintf(line, sizeof line, "max exactness defect %.16g\n", *defect);
            err << line;
        }
    } else {
        require_json(o, "quadrature");
        Json out = io::emit_rule(rule, o.n, o.theta);
        if (defect) out["max_defect"] = io::number(*defect);
        text = dump(out);
    }
    return defect && !(*defect <= 1e-9) ? kVerificationFailed : kSuccess;
}

std::uint64_t seed_from_env() {
    const char* raw = std::getenv("SNAKE_SEED");
    if (raw == nullptr || *raw == '\0') return 1;
    const std::string s(raw);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) {
        throw ValidationError("SNAKE_SEED must be a decimal integer, got '" + s + "'");
    }
    return std::stoull(s);
}

int cmd_verify(const Options& o, std::string& text) {
    verify::Config config;
    config.seed = seed_from_env();
    if (o.m != 0) config.m = o.m;
    const std::optional<SchurSequence> alphas = inline_alphas(o);
    if (alphas || !o.measure.empty()) config.measure = measure_of(o, alphas);

    std::vector<std::string> suites;
    if (o.suite == "all") {
        suites = verify::suite_names();
    } else {
        suites.push_back(o.suite);
    }
    std::vector<verify::Row> rows;
    for (const std::string& name : suites) {
        std::vector<verify::Row> part = verify::run_suite(name, config);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const verify::Row& r) { return r.pass; });

    if (o.format == "json") {
        Json list = Json::array();
        for (const verify::Row& r : rows) {
            Json row;
            row["suite"] = r.suite;
            row["case"] = r.name;
            row["error"] = io::number(r.error);
            row["tolerance"] = r.tolerance;
            row["pass"] = r.pass;
            if (!r.detail.empty()) row["detail"] = r.detail;
            list.push_back(row);
        }
        Json out;
        out["seed"] = config.seed;
        out["pass"] = ok;
        out["cases"] = list;
        text = dump(out);
    } else if (o.format.empty() || o.format == "table") {
        std::ostringstream table;
        table << "seed " << config.seed << "\n";
        verify::print_table(table, rows);
        text = table.str();
    } else {
        throw ValidationError("verify supports --format table or json");
    }
    return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Snake-shaped Givens factorizations, entry expansion and Szego quadrature", "snake"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    std::map<std::string, CLI::Option*> flags;
    flags["shape"] = app.add_option("--shape", o.shape, "hessenberg | cmv | bits | monomials")
                         ->check(CLI::IsMember({"hessenberg", "cmv", "bits", "monomials"}));
    flags["s"] = app.add_option("--s", o.s, "generating sequence bits, e.g. 1,0,1,0");
    flags["monomials"] = app.add_option("--monomials", o.monomials, "monomial exponents, e.g. 0,-1,1");
    flags["alphas"] = app.add_option("--alphas", o.alphas, "Schur parameters, e.g. 0.6,-0.3j,0.1+0.2j");
    flags["measure"] = app.add_option("--measure", o.measure, "lebesgue or a JSON measure descriptor");
    flags["n"] = app.add_option("--n", o.n, "size (default 8)");
    flags["theta"] = app.add_option("--theta", o.theta, "phase of the truncation in radians (default 0)");
    flags["i"] = app.add_option("--i", o.i, "row index");
    flags["j"] = app.add_option("--j", o.j, "column index");
    flags["format"] = app.add_option("--format", o.format, "json | csv (verify: table | json)")
                          ->check(CLI::IsMember({"json", "csv", "table"}));
    flags["out"] = app.add_option("--out", o.out, "write output to this file");
    flags["verify"] = app.add_flag("--verify", o.verify, "report the exactness defect of the rule");
    flags["suite"] = app.add_option("--suite", o.suite, "verify suite: all | oracle | unitarity | "
                                                        "bandwidth | round-trip | exactness");
    flags["m"] = app.add_option("--m", o.m, "shape length");
    app.add_option("--config", o.config, "JSON file of option values; flags win");

    CLI::App* build = app.add_subcommand("build", "factor order of a snake");
    CLI::App* entry_cmd = app.add_subcommand("entry", "one matrix entry and its path");
    CLI::App* expand = app.add_subcommand("expand", "dense leading block");
    CLI::App* bandwidth = app.add_subcommand("bandwidth", "structural bandwidths of a shape");
    CLI::App* quadrature = app.add_subcommand("quadrature", "Szego quadrature rule");
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suites");

    std::vector<std::string> argv_store = {"snake"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        if (!o.config.empty()) apply_config(o.config, o, flags);
        std::string text;
        int code = kSuccess;
        if (build->parsed()) {
            code = cmd_build(o, text);
        } else if (entry_cmd->parsed()) {
            code = cmd_entry(o, text);
        } else if (expand->parsed()) {
            code = cmd_expand(o, text);
        } else if (bandwidth->parsed()) {
            code = cmd_bandwidth(o, text);
        } else if (quadrature->parsed()) {
            code = cmd_quadrature(o, text, err);
        } else if (verify_cmd->parsed()) {
            code = cmd_verify(o, text);
        }
        if (o.out.empty()) {
            out << text;
        } else {
            std::ofstream file(o.out);
            if (!(file << text)) throw ValidationError("cannot write " + o.out);
        }
        return code;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumericalFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumericalFailure;
    }
}

}  // namespace snake::cli
