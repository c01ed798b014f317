#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hotspot {

/// Raised when an exhaustive enumeration would exceed the configured cap.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t cap)
        : std::runtime_error("enumeration budget exceeded: need " + std::to_string(required) +
                             " > cap " + std::to_string(cap)),
          required_(required),
          cap_(cap) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

}  // namespace hotspot
