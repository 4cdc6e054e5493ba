#pragma once

#include <stdexcept>
#include <string>

namespace sqc {

// Thrown when a requested phase-matching or search problem has no solution
// in the given domain (e.g. a non-positive bare wavevector mismatch).
class NoSolutionError : public std::domain_error {
public:
    explicit NoSolutionError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a set of interaction terms cannot be driven at a uniform
// strength because terms sharing one pump demand different amplitudes.
class UnbalanceableError : public std::domain_error {
public:
    explicit UnbalanceableError(const std::string& what) : std::domain_error(what) {}
};

// Thrown on malformed configuration or dataset input.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sqc
