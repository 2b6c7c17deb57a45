#pragma once

#include <stdexcept>
#include <string>

namespace qtrans {

/// Invalid simulation setup (grid geometry, scenario keys, mismatched objects).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A scattering transition that cannot be carried out (e.g. emission below the
/// spectral floor with excessive truncation).
class TransitionError : public std::runtime_error {
public:
    explicit TransitionError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qtrans
