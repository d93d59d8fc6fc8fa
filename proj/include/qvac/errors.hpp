#pragma once

#include <stdexcept>
#include <string>

namespace qvac {

// Invalid argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Quadrature or summation failed to reach its tolerance within the refinement limit.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Lossless mirror evaluated exactly on a cavity resonance: the Airy function is a delta peak there.
class SingularResonanceError : public std::domain_error {
public:
    explicit SingularResonanceError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qvac
