#pragma once

#include <stdexcept>
#include <string>

namespace equibouquet {

/// Operands built for different genus / ambient dimension.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of an operation (g = 0, non-finite input, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input violates a stated precondition (non-commuting involutions, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Embedding and representation disagree.
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed JSON document or one that does not follow the expected schema.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace equibouquet
