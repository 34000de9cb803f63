#pragma once

#include <stdexcept>
#include <string>

namespace popav {

// Thrown when a request exceeds a hard-coded feasibility cap (brute-force
// enumeration past the cap, permanents past n=24, and similar).
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace popav
