#pragma once

#include <stdexcept>
#include <string>

namespace svma {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input pose cannot be normalized (e.g. all joints coincide with the root).
class DegenerateInputError : public Error {
public:
    explicit DegenerateInputError(const std::string& msg) : Error(msg) {}
};

/// Keypoint file or checkpoint does not match the expected schema.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

/// Invalid configuration value or missing required setting.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Mathematical precondition violated (nonpositive depth, zero camera, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Non-finite value produced during a numeric computation. Carries the
/// location (layer or loss term) where the fault was detected.
class NumericFault : public Error {
public:
    NumericFault(const std::string& where, const std::string& msg)
        : Error("numeric fault in " + where + ": " + msg), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

} // namespace svma
