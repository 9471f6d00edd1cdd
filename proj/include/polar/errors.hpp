#pragma once

#include <stdexcept>
#include <string>

namespace polar {

// Malformed input (scene/schema). CLI exit code 2.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical precondition of an operation failed. CLI exit code 3.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal invariant breach: indicates a bug. CLI exit code 4.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw PreconditionError(msg);
}

inline void require_internal(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

} // namespace polar
