#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wellcov {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OutOfRangeVertexError : public Error {
public:
    using Error::Error;
};

class SelfLoopError : public Error {
public:
    using Error::Error;
};

/// Input text could not be parsed (edge lists, DIMACS, role maps).
class ParseError : public Error {
public:
    using Error::Error;
};

class MalformedHeaderError : public ParseError {
public:
    using ParseError::ParseError;
};

class LiteralOutOfRangeError : public ParseError {
public:
    using ParseError::ParseError;
};

class ClauseCountMismatchError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Brute-force SAT refused because the formula has too many variables.
class TooManyVariablesError : public Error {
public:
    using Error::Error;
};

/// An exhaustive recognizer refused an input above its size cap.
class InstanceTooLargeError : public Error {
public:
    using Error::Error;
};

class NotThreeCnfError : public Error {
public:
    using Error::Error;
};

class TautologicalClauseError : public Error {
public:
    using Error::Error;
};

class UniversalVertexPresentError : public Error {
public:
    using Error::Error;
};

/// The forced set of a maximum-independent-set query is not independent.
class InfeasibleForcedError : public Error {
public:
    using Error::Error;
};

class ExternalSolverError : public Error {
public:
    using Error::Error;
};

/// Thrown by chordal-only algorithms on non-chordal input. Carries an
/// induced cycle of length >= 4 in cyclic order.
class NotChordalError : public Error {
public:
    NotChordalError(std::string message, std::vector<int> cycle)
        : Error(std::move(message)), cycle_(std::move(cycle)) {}

    const std::vector<int>& witness_cycle() const noexcept { return cycle_; }

private:
    std::vector<int> cycle_;
};

}  // namespace wellcov
