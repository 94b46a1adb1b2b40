#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace copairs {

// Thrown when a brute-force request exceeds the configured work budget.
// Carries the budget that would have been required so callers can report it.
class budget_error : public std::runtime_error {
public:
    budget_error(std::uint64_t required, std::uint64_t configured)
        : std::runtime_error("work budget exceeded: requires " +
                             std::to_string(required) + " tuple evaluations, budget is " +
                             std::to_string(configured)),
          required_(required),
          configured_(configured) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t configured() const { return configured_; }

private:
    std::uint64_t required_;
    std::uint64_t configured_;
};

}  // namespace copairs
