#pragma once

#include <stdexcept>
#include <string>

namespace tjcm {

// Raised when a requested Fock truncation would exceed the configured cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tjcm
