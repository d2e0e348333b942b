#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "snake/oracle.hpp"
#include "snake/quadrature.hpp"
#include "snake/schur.hpp"
#include "snake/snake.hpp"

namespace snake::io {

using Json = nlohmann::ordered_json;

// Nearest double to the 16-significant-digit decimal rendering of x.
double round16(double x);
Json number(double x);
// [re, im]
Json complex_pair(Complex z);
Complex parse_complex_pair(const Json& j);

// "0.3+0.4j", "-0.5j", "0.6", "1e-3-2e-2i"
Complex parse_complex(std::string_view text);
std::vector<Complex> parse_complex_list(std::string_view csv);
std::vector<int> parse_int_list(std::string_view csv);
std::vector<std::uint8_t> parse_bit_list(std::string_view csv);

// {"s": [...]}
Json emit_shape(const GeneratingSequence& gen);
GeneratingSequence parse_shape(const Json& j);

// {"alphas": [[re, im], ...]}
Json emit_schur(const SchurSequence& schur);
SchurSequence parse_schur(const Json& j);
// Inline alphas: csv of complex literals, a JSON array of pairs, or a schur object.
SchurSequence parse_alphas(std::string_view text);

// {"n":, "theta":, "nodes": [[re, im], ...], "weights": [...]}
Json emit_rule(const QuadratureRule& rule, std::size_t n, double theta);
QuadratureRule parse_rule(const Json& j);
// arg,modulus,weight
std::string rule_csv(const QuadratureRule& rule);

// A bare name ("lebesgue") or a descriptor object:
//   {"type": "bernstein-szego", "alphas": [[re, im], ...]}
//   {"type": "geronimus", "a": [re, im] | number, "length": 12}
//   {"type": "grid", "points": [[theta, weight], ...]}
MeasureSpec parse_measure(std::string_view text);
Json emit_measure(const MeasureSpec& measure);

}  // namespace snake::io
