#pragma once

#include <stdexcept>
#include <string>

namespace marl {

// Error taxonomy shared across the library. All are recoverable at the
// harness level: a suite run catches per-seed failures and keeps going.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (e.g. submitted an action the
// mask forbids). Distinct from ConfigError: this is a bug, not bad input.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace marl
