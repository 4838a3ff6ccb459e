#pragma once

#include <stdexcept>
#include <string>

namespace apx {

// Caller passed something malformed: bad flag, mismatched truncation orders,
// index past the end of a series, unknown identity tag.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// The request is well formed but mathematically undefined: zero denominator,
// a quotient that is not a power series, a singular parameter combination.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

} // namespace apx
