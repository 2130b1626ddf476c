#pragma once

#include <stdexcept>
#include <string>

namespace siltlab {

struct SiltError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A relation ideal that is not admissible below the configured cap.
struct NotAdmissible : SiltError {
    using SiltError::SiltError;
};

struct NotCentral : SiltError {
    using SiltError::SiltError;
};

struct NotInRadical : SiltError {
    using SiltError::SiltError;
};

// A complex handed to an operation that requires minimality.
struct NotMinimal : SiltError {
    using SiltError::SiltError;
};

struct UnknownAlgebra : SiltError {
    using SiltError::SiltError;
};

struct BadParameter : SiltError {
    using SiltError::SiltError;
};

// An internal consistency check failed; indicates a bug, never expected input.
struct ValidationFailure : SiltError {
    using SiltError::SiltError;
};

}  // namespace siltlab
