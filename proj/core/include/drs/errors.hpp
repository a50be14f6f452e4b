#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace drs {

// Domain error: invalid input or a violated operation precondition.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// An exhaustive search ran out of its subset-check budget.
class WorkLimitError : public Error {
public:
    WorkLimitError(std::uint64_t limit, int cardinality)
        : Error("work limit of " + std::to_string(limit) +
                " subset checks exceeded at cardinality " +
                std::to_string(cardinality)),
          limit_(limit),
          cardinality_(cardinality) {}

    std::uint64_t limit() const { return limit_; }
    int cardinality_reached() const { return cardinality_; }

private:
    std::uint64_t limit_;
    int cardinality_;
};

}  // namespace drs
