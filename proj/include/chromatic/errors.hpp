#pragma once

#include <stdexcept>
#include <string>

namespace chromatic {

struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Exhaustive or per-graph work would exceed the configured order cap.
struct OrderTooLargeError : Error
{
    using Error::Error;
};

// Malformed input file (census CSV, polynomial JSON, graph line).
struct SchemaError : Error
{
    using Error::Error;
};

// Structurally valid input that violates a required invariant; the message
// names the offending cell or field.
struct InvariantError : Error
{
    using Error::Error;
};

} // namespace chromatic
