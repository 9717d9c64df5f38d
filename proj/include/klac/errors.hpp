#pragma once

#include <stdexcept>
#include <string>

namespace klac {

// Shape or ambient-dimension mismatch between operands.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A stated precondition between subspaces/operators does not hold
// (e.g. an operator fails to preserve a subcomplex).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// Model data is degenerate, incomplete or violates a structural invariant
// (singular form, J^2 != -id, metric not positive definite, ...).
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input file could not be parsed; carries a location.
struct ParseError : std::runtime_error {
    std::string where;  // "line L, column C" or a JSON path
    ParseError(const std::string& msg, std::string where_)
        : std::runtime_error(msg + " (" + where_ + ")"), where(std::move(where_)) {}
};

}  // namespace klac
