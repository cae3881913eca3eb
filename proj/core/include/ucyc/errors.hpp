#pragma once

#include <stdexcept>
#include <string>

namespace ucyc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A form without a unique entry has no canonical representation.
struct BadFormError : Error {
    using Error::Error;
};

// Requested dropped value is not a unique entry of the form.
struct InvalidDropError : Error {
    using Error::Error;
};

// phi() applied to a pattern that already contains a 1.
struct NotBadError : Error {
    using Error::Error;
};

// kappa() applied to a class without a singleton value.
struct NotGoodError : Error {
    using Error::Error;
};

// A rep choice assigned a value that is not a singleton of its class.
struct InvalidRepChoiceError : Error {
    using Error::Error;
};

// The all-ones anchor vertex is absent from the graph.
struct MissingAnchorError : Error {
    using Error::Error;
};

// Component fails the degree or connectivity requirement; message carries the witness.
struct NotEulerianError : Error {
    using Error::Error;
};

struct BudgetExceededError : Error {
    using Error::Error;
};

struct SymbolOutOfRangeError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

} // namespace ucyc
