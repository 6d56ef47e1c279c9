// errors.hpp - exception types shared by every lsd module
#pragma once

#include <stdexcept>
#include <string>

namespace lsd {

// Invalid input: a value violates a domain invariant (E <= 0, bad config, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical procedure could not deliver the requested result
// (tolerance not reached, grid too small, degenerate fit).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lsd
