#pragma once

#include <stdexcept>
#include <string>

namespace mocsim {

/// Base class for all simulator errors.
struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PastEventError : SimError {
    using SimError::SimError;
};

struct EmptyQueueError : SimError {
    using SimError::SimError;
};

struct InvalidJitterError : SimError {
    using SimError::SimError;
};

struct CapacityExceededError : SimError {
    using SimError::SimError;
};

struct AlreadyClosedError : SimError {
    using SimError::SimError;
};

struct UnknownTaskError : SimError {
    using SimError::SimError;
};

struct DuplicateOfferError : SimError {
    using SimError::SimError;
};

struct CapacityRacedError : SimError {
    using SimError::SimError;
};

struct IncompleteLogError : SimError {
    using SimError::SimError;
};

/// Scenario file is not syntactically valid JSON.
struct ParseError : SimError {
    ParseError(std::string msg, int line_, int column_)
        : SimError("parse error at line " + std::to_string(line_) + ", column " +
                   std::to_string(column_) + ": " + std::move(msg)),
          line(line_), column(column_) {}
    int line;
    int column;
};

/// Scenario file is valid JSON but violates the schema; `field` names the offender.
struct ValidationError : SimError {
    explicit ValidationError(std::string field_, const std::string& msg)
        : SimError("invalid scenario: " + field_ + ": " + msg), field(std::move(field_)) {}
    std::string field;
};

struct IoError : SimError {
    using SimError::SimError;
};

} // namespace mocsim
