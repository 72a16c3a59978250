#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

// Malformed descriptors, bad flags, dimension mismatches.
struct parameter_error : std::invalid_argument {
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// A point required to lie in the domain does not.
struct membership_error : std::domain_error {
    explicit membership_error(const std::string& what) : std::domain_error(what) {}
};

// Numerical guard tripped (kernel base left the right half plane,
// non-finite integrand values, loss of positive definiteness).
struct numeric_guard_error : std::runtime_error {
    explicit numeric_guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bergman
