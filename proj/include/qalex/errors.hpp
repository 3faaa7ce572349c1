#pragma once

#include <stdexcept>
#include <string>

namespace qalex {

/// Malformed or out-of-range user input (braid text, flag values, ...).
/// The CLI maps this to exit code 1.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// An exactness claim failed: a division that should have been exact was
/// not, a linear system that should be regular was singular, or an algebraic
/// identity did not hold. These conditions are never truncated or patched
/// over; the CLI maps them to exit code 2.
class ExactnessError : public std::runtime_error {
public:
    explicit ExactnessError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qalex
