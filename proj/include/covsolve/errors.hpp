#pragma once

#include <stdexcept>
#include <string>

namespace covsolve {

enum class ErrorCode {
    EmptyForbiddenSet,
    SingletonForbiddenSet,
    AttributeOutOfRange,
    UniverseMismatch,
    NotAntichain,
    ChosenNotInFamily,
    RowOutOfRange,
    SizeExceedsK,
    VariableCapExceeded,
    BadInput,
};

// Structural problem with an input (instance, family, JSON document, ...).
class ValidationError : public std::runtime_error {
public:
    ValidationError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// No covering exists for the instance (some forbidden set sits inside a required set).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A node/pair budget was exhausted before the search could conclude.
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace covsolve
