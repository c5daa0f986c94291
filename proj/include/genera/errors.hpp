#pragma once

#include <stdexcept>
#include <string>

namespace genera {

// Raised when an input is valid in principle but exceeds an enforced
// resource ceiling (lattice size, table weight, precision of the constants
// table). Distinct from std::domain_error so the CLI can map the two to
// different exit codes.
class capability_error : public std::runtime_error {
public:
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace genera
