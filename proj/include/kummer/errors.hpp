#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

// Error taxonomy. domain_error: inputs outside the mathematical domain of the
// routine. usage_error: structurally invalid call (mismatched series centers,
// bad option values). numerical_error: a computation that refused to converge
// or lost its invariants at runtime.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Outcome flag carried by evaluation results whose linear value may not be
// representable in double.
enum class Status { ok, underflow, overflow };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::underflow: return "underflow";
        case Status::overflow: return "overflow";
        default: return "ok";
    }
}

} // namespace kummer
