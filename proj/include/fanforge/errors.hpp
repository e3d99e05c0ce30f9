#pragma once

#include <stdexcept>
#include <string>

namespace fanforge {

// Bad identifier passed to a graph operation (edge/vertex not present).
struct unknown_id_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Contracting a loop is rejected; callers must delete loops explicitly.
struct loop_contraction_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A runtime check of a proved statement failed. This is never expected on
// valid inputs; it signals an implementation bug, and carries whatever
// diagnostic payload the failing construction had on hand.
struct theorem_violation : std::logic_error {
    explicit theorem_violation(const std::string& what, std::string trace_json = "")
        : std::logic_error(what), trace(std::move(trace_json)) {}
    std::string trace;
};

// Brute-force instruments refuse inputs beyond their configured size.
struct size_guard_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fanforge
