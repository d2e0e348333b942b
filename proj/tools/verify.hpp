#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "snake/oracle.hpp"

namespace snake::verify {

struct Row {
    std::string suite;
    std::string name;
    double error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

struct Config {
    std::uint64_t seed = 1;
    // Shape length for the bandwidth suite.
    std::size_t m = 10;
    // Replaces the default measure list of the oracle and exactness suites.
    std::optional<MeasureSpec> measure;
};

const std::vector<std::string>& suite_names();

// Throws ValidationError for an unknown suite name.
std::vector<Row> run_suite(const std::string& name, const Config& config);

void print_table(std::ostream& out, const std::vector<Row>& rows);

// Known parameters of the measure, or the ones recovered from its moments.
SchurSequence schur_for(const MeasureSpec& measure, std::size_t count);

}  // namespace snake::verify
