#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace snake {

// Input validation failures. The CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidSchurParameter : public ValidationError {
public:
    explicit InvalidSchurParameter(std::size_t index);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Malformed generating sequence or monomial order. index() names the first
// offending position.
class ShapeError : public ValidationError {
public:
    ShapeError(std::size_t index, const std::string& what);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class IndexError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Numerical breakdown: eigensolver non-convergence, singular Gram matrix,
// loss of positive definiteness, unconverged grid refinement. Exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace snake
