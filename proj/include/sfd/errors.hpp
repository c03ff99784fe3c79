#pragma once

#include <stdexcept>
#include <string>

namespace sfd {

/// Violated precondition: bad sizes, non-positive gain, empty lists, ...
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical kernel failed to deliver (non-convergence, near-singular solve).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sfd
