#pragma once

#include <stdexcept>
#include <string>

namespace sixv {

// Malformed input: mismatched variable tables, invalid partitions,
// out-of-range indices, inconsistent configuration.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// An arithmetic request would produce more terms than the configured cap.
class TermCapExceeded : public StructuralError {
public:
    explicit TermCapExceeded(const std::string& msg) : StructuralError(msg) {}
};

// An occupation vector with a count >= 2 was used where a 0/1 pattern
// is required.
class NotStrictSector : public StructuralError {
public:
    explicit NotStrictSector(const std::string& msg) : StructuralError(msg) {}
};

} // namespace sixv
