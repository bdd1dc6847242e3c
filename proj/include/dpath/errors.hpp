#pragma once

#include <stdexcept>
#include <string>

namespace dpath {

// Base class for all library errors. Solvers report infeasibility through
// their return value; exceptions are reserved for violated preconditions,
// malformed input and exceeded search budgets.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct NotSinglePath : Error {
    explicit NotSinglePath(const std::string& msg) : Error(msg) {}
};

struct NotEndPrecolored : Error {
    explicit NotEndPrecolored(const std::string& msg) : Error(msg) {}
};

struct DemandsUnsupported : Error {
    explicit DemandsUnsupported(const std::string& msg) : Error(msg) {}
};

struct TooFewColors : Error {
    explicit TooFewColors(const std::string& msg) : Error(msg) {}
};

struct Infeasible : Error {
    explicit Infeasible(const std::string& msg) : Error(msg) {}
};

struct ConstraintConflict : Error {
    explicit ConstraintConflict(const std::string& msg) : Error(msg) {}
};

struct PositionOutOfRange : Error {
    explicit PositionOutOfRange(const std::string& msg) : Error(msg) {}
};

struct InconsistentConstraints : Error {
    explicit InconsistentConstraints(const std::string& msg) : Error(msg) {}
};

struct NotNonAlternating : Error {
    explicit NotNonAlternating(const std::string& msg) : Error(msg) {}
};

struct NotNormalized : Error {
    explicit NotNormalized(const std::string& msg) : Error(msg) {}
};

struct InvalidRepresentation : Error {
    explicit InvalidRepresentation(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct SemanticError : Error {
    explicit SemanticError(const std::string& msg) : Error(msg) {}
};

}  // namespace dpath
