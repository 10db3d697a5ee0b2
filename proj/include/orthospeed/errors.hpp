#pragma once

#include <stdexcept>
#include <string>

namespace orthospeed {

/// Caller broke a documented precondition (shape, hermiticity, range).
class ContractViolation : public std::invalid_argument {
public:
    explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// A Bloch vector or density matrix outside the physical state space.
class InvalidState : public ContractViolation {
public:
    explicit InvalidState(const std::string& what) : ContractViolation(what) {}
};

/// Bad user-level argument (threshold out of range, unknown sweep parameter).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative routine did not converge or produced non-finite values.
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

class IoFailure : public std::runtime_error {
public:
    explicit IoFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orthospeed
