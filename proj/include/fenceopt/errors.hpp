#pragma once
#include <stdexcept>
#include <string>

namespace fenceopt {

// Input outside the mathematical domain of an operation (negative area,
// area beyond the rectangle, shape leaving the domain).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input is well-formed but the operation does not define a result for it
// (e.g. a polygon touching a reflection axis only at isolated points).
class UnsupportedInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Problem instance exceeds a hard resource limit of the exact algorithm.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A geometric construction failed (self-intersecting loop, degenerate edge).
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fenceopt
