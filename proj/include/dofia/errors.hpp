#pragma once

#include <stdexcept>
#include <string>

namespace dofia {

// Bad user input (antenna counts, labels, spec dimensions). CLI exit code 1.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Internal cross-check failed (formula vs geometry, solver vs truth). CLI exit code 2.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace dofia
