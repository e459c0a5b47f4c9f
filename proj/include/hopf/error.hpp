#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct field_mismatch : error {
    field_mismatch() : error("operands belong to different fields") {}
    explicit field_mismatch(const std::string& what) : error(what) {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct dimension_mismatch : error {
    using error::error;
};

// A documented precondition of an operation does not hold for the given input.
struct precondition_failed : error {
    using error::error;
};

struct budget_exceeded : error {
    using error::error;
};

} // namespace hopf
