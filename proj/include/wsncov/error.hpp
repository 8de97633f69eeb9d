#pragma once

#include <stdexcept>
#include <string>

namespace wsncov {

// Raised when an argument lies outside the domain of an operation
// (nonpositive radius, alpha outside (0,1], empty sample set, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wsncov
