#pragma once

#include <stdexcept>
#include <string>

namespace segrekit {

struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonUnitError : DomainError {
    using DomainError::DomainError;
};

// raised when a theorem-backed postcondition fails; means a bug or bad input
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace segrekit
