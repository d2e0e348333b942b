#include "io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "snake/error.hpp"

namespace snake::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view text, std::string_view what) {
    const std::string s(trim(text));
    if (s.empty()) throw ValidationError("empty number in " + std::string(what));
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        throw ValidationError("cannot parse '" + s + "' as a number in " + std::string(what));
    }
    return v;
}

std::vector<std::string_view> split(std::string_view csv) {
    std::vector<std::string_view> out;
    csv = trim(csv);
    if (csv.empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = csv.find(',', start);
        out.push_back(trim(csv.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double json_double(const Json& j, std::string_view what) {
    if (!j.is_number()) throw ValidationError(std::string(what) + " must be a number");
    return j.get<double>();
}

Json parse_json(std::string_view text, std::string_view what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError("malformed JSON in " + std::string(what) + ": " + e.what());
    }
}

}  // namespace

double round16(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16g", x);
    return std::strtod(buf, nullptr);
}

Json number(double x) { return round16(x); }

Json complex_pair(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Complex parse_complex_pair(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (!j.is_array() || j.size() != 2) throw ValidationError("complex value must be [re, im]");
    return {json_double(j[0], "real part"), json_double(j[1], "imaginary part")};
}

Complex parse_complex(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ValidationError("empty complex literal");
    const char last = s.back();
    if (last != 'j' && last != 'i' && last != 'J' && last != 'I') {
        return parse_double(s, "complex literal");
    }
    std::string_view body = s.substr(0, s.size() - 1);
    std::size_t split_at = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    const std::string_view re_text = split_at == std::string_view::npos ? "" : body.substr(0, split_at);
    std::string_view im_text = split_at == std::string_view::npos ? body : body.substr(split_at);
    double im = 0.0;
    if (im_text.empty() || im_text == "+") {
        im = 1.0;
    } else if (im_text == "-") {
        im = -1.0;
    } else {
        if (im_text.front() == '+') im_text.remove_prefix(1);
        im = parse_double(im_text, "complex literal '" + std::string(s) + "'");
    }
    const double re = re_text.empty() ? 0.0 : parse_double(re_text, "complex literal '" + std::string(s) + "'");
    return {re, im};
}

std::vector<Complex> parse_complex_list(std::string_view csv) {
    std::vector<Complex> out;
    for (std::string_view item : split(csv)) out.push_back(parse_complex(item));
    return out;
}

std::vector<int> parse_int_list(std::string_view csv) {
    std::vector<int> out;
    for (std::string_view item : split(csv)) {
        const double v = parse_double(item, "integer list");
        if (v != std::floor(v) || std::abs(v) > 1e9) {
            throw ValidationError("'" + std::string(item) + "' is not an integer");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<std::uint8_t> parse_bit_list(std::string_view csv) {
    std::vector<std::uint8_t> out;
    const std::vector<int> values = parse_int_list(csv);
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] != 0 && values[k] != 1) {
            throw ShapeError(k + 1, "generating sequence bit s_" + std::to_string(k + 1) +
                                        " must be 0 or 1");
        }
        out.push_back(static_cast<std::uint8_t>(values[k]));
    }
    return out;
}

Json emit_shape(const GeneratingSequence& gen) {
    Json bits = Json::array();
    for (std::uint8_t b : gen.bits()) bits.push_back(static_cast<int>(b));
    return Json{{"s", bits}};
}

GeneratingSequence parse_shape(const Json& j) {
    if (!j.is_object() || !j.contains("s") || !j["s"].is_array()) {
        throw ValidationError("shape must be an object with an \"s\" array");
    }
    std::vector<std::uint8_t> bits;
    for (std::size_t k = 0; k < j["s"].size(); ++k) {
        const Json& b = j["s"][k];
        if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1)) {
            throw ShapeError(k + 1, "generating sequence bit s_" + std::to_string(k + 1) +
                                        " must be 0 or 1");
        }
        bits.push_back(static_cast<std::uint8_t>(b.get<int>()));
    }
    return GeneratingSequence(std::move(bits));
}

Json emit_schur(const SchurSequence& schur) {
    Json alphas = Json::array();
    for (const Complex a : schur.alphas()) alphas.push_back(complex_pair(a));
    return Json{{"alphas", alphas}};
}

SchurSequence parse_schur(const Json& j) {
    const Json* list = &j;
    if (j.is_object()) {
        if (!j.contains("alphas")) throw ValidationError("schur object needs an \"alphas\" field");
        list = &j["alphas"];
    }
    if (list->is_string()) return SchurSequence(parse_complex_list(list->get<std::string>()));
    if (!list->is_array()) throw ValidationError("alphas must be an array of [re, im] pairs");
    std::vector<Complex> out;
    for (const Json& item : *list) out.push_back(parse_complex_pair(item));
    return SchurSequence(std::move(out));
}

SchurSequence parse_alphas(std::string_view text) {
    const std::string_view s = trim(text);
    if (!s.empty() && (s.front() == '[' || s.front() == '{')) return parse_schur(parse_json(s, "--alphas"));
    return SchurSequence(parse_complex_list(s));
}

Json emit_rule(const QuadratureRule& rule, std::size_t n, double theta) {
    Json nodes = Json::array();
    Json weights = Json::array();
    for (std::size_t k = 0; k < rule.size(); ++k) {
        nodes.push_back(complex_pair(rule.nodes[k]));
        weights.push_back(number(rule.weights[k]));
    }
    Json out;
    out["n"] = n;
    out["theta"] = number(theta);
    out["nodes"] = nodes;
    out["weights"] = weights;
    return out;
}

QuadratureRule parse_rule(const Json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("weights")) {
        throw ValidationError("rule must carry \"nodes\" and \"weights\"");
    }
    QuadratureRule rule;
    for (const Json& z : j["nodes"]) rule.nodes.push_back(parse_complex_pair(z));
    for (const Json& w : j["weights"]) rule.weights.push_back(json_double(w, "weight"));
    if (rule.nodes.size() != rule.weights.size()) {
        throw ValidationError("rule has different numbers of nodes and weights");
    }
    return rule;
}

std::string rule_csv(const QuadratureRule& rule) {
    std::ostringstream out;
    out << "arg,modulus,weight\n";
    char buf[96];
    for (std::size_t k = 0; k < rule.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.16g,%.16g,%.16g\n", principal_arg(rule.nodes[k]),
                      std::abs(rule.nodes[k]), rule.weights[k]);
        out << buf;
    }
    return out.str();
}

MeasureSpec parse_measure(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ValidationError("empty measure descriptor");
    if (s.front() != '{') {
        if (s == "lebesgue") return MeasureSpec::lebesgue();
        throw ValidationError("measure '" + std::string(s) +
                              "' needs a JSON descriptor; only \"lebesgue\" has no parameters");
    }
    const Json j = parse_json(s, "--measure");
    if (!j.contains("type") || !j["type"].is_string()) {
        throw ValidationError("measure descriptor needs a \"type\" string");
    }
    const std::string type = j["type"].get<std::string>();
    if (type == "lebesgue") return MeasureSpec::lebesgue();
    if (type == "bernstein-szego") return MeasureSpec::bernstein_szego(parse_schur(j));
    if (type == "geronimus") {
        if (!j.contains("a")) throw ValidationError("geronimus measure needs \"a\"");
        const Complex a = parse_complex_pair(j["a"]);
        std::size_t length = Geronimus{}.length;
        if (j.contains("length")) {
            if (!j["length"].is_number_integer() || j["length"].get<long>() < 1) {
                throw ValidationError("geronimus \"length\" must be a positive integer");
            }
            length = j["length"].get<std::size_t>();
        }
        return MeasureSpec::geronimus(a, length);
    }
    if (type == "grid") {
        if (!j.contains("points") || !j["points"].is_array()) {
            throw ValidationError("grid measure needs a \"points\" array of [theta, weight]");
        }
        std::vector<std::pair<double, double>> points;
        for (const Json& p : j["points"]) {
            if (!p.is_array() || p.size() != 2) throw ValidationError("grid point must be [theta, weight]");
            points.emplace_back(json_double(p[0], "theta"), json_double(p[1], "weight"));
        }
        return MeasureSpec::grid(points);
    }
    throw ValidationError("unknown measure type '" + type + "'");
}

Json emit_measure(const MeasureSpec& measure) {
    struct Visitor {
        Json operator()(const Lebesgue&) const { return Json{{"type", "lebesgue"}}; }
        Json operator()(const BernsteinSzego& m) const {
            Json out{{"type", "bernstein-szego"}};
            out["alphas"] = emit_schur(m.prefix)["alphas"];
            return out;
        }
        Json operator()(const Geronimus& m) const {
            Json out{{"type", "geronimus"}};
            out["a"] = complex_pair(m.a);
            out["length"] = m.length;
            return out;
        }
        Json operator()(const Grid& m) const {
            Json points = Json::array();
            for (std::size_t k = 0; k < m.theta.size(); ++k) {
                points.push_back(Json::array({number(m.theta[k]), number(m.weight[k])}));
            }
            return Json{{"type", "grid"}, {"points", points}};
        }
    };
    return std::visit(Visitor{}, measure.variant());
}

}  // namespace snake::io
