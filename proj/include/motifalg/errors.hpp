#pragma once

#include <stdexcept>
#include <string>

namespace motifalg {

// Validation errors: bad inputs, kind mismatches, violated preconditions.
// The CLI maps these to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidVertex : ValidationError {
    using ValidationError::ValidationError;
};
struct KindMismatch : ValidationError {
    using ValidationError::ValidationError;
};
struct TypeMismatch : ValidationError {
    using ValidationError::ValidationError;
};
struct DuplicateKey : ValidationError {
    using ValidationError::ValidationError;
};
struct SupportNotDownwardClosed : ValidationError {
    using ValidationError::ValidationError;
};
struct NotOrdered : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidRange : ValidationError {
    using ValidationError::ValidationError;
};
struct BudgetExceeded : ValidationError {
    using ValidationError::ValidationError;
};
struct RetriesExhausted : ValidationError {
    using ValidationError::ValidationError;
};

// Size guard violations. The CLI maps these to exit code 3.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failures that must never occur (e.g. an inexact
// division where exactness is guaranteed). The CLI maps these to exit code 4.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};
struct DivisionInexact : InternalError {
    using InternalError::InternalError;
};

} // namespace motifalg
