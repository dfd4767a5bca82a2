#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace proxdeg {

/// A caller broke an operation's precondition (e.g. coincident endpoints
/// passed to a predicate).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An argument is outside its admissible range (radius <= 0, n too small,
/// mismatched vertex counts, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised at point-set ingestion when two points coincide.
class DuplicatePointError : public std::invalid_argument {
public:
    DuplicatePointError(std::size_t first, std::size_t second)
        : std::invalid_argument("duplicate points at indices " + std::to_string(first) + " and " +
                                std::to_string(second)),
          first_(first), second_(second) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

/// Raised by path-based measures when some vertex pair has no connecting path.
class DisconnectedGraphError : public std::runtime_error {
public:
    DisconnectedGraphError(std::size_t from, std::size_t to)
        : std::runtime_error("graph is disconnected: no path between " + std::to_string(from) +
                             " and " + std::to_string(to)),
          from_(from), to_(to) {}

    std::size_t from() const noexcept { return from_; }
    std::size_t to() const noexcept { return to_; }

private:
    std::size_t from_;
    std::size_t to_;
};

/// Wraps an error thrown while running one Monte Carlo trial.
class TrialError : public std::runtime_error {
public:
    TrialError(std::size_t trial, const std::string& what)
        : std::runtime_error("trial " + std::to_string(trial) + ": " + what), trial_(trial) {}

    std::size_t trial() const noexcept { return trial_; }

private:
    std::size_t trial_;
};

}  // namespace proxdeg
