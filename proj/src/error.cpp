#include "snake/error.hpp"

namespace snake {

InvalidSchurParameter::InvalidSchurParameter(std::size_t index)
    : ValidationError("Schur parameter at index " + std::to_string(index) +
                      " has modulus >= 1"),
      index_(index) {}

ShapeError::ShapeError(std::size_t index, const std::string& what)
    : ValidationError(what), index_(index) {}

}  // namespace snake
