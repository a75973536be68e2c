#pragma once

#include <stdexcept>
#include <string>

namespace corepalg {

/// Matrix or vector dimensions do not fit the operation.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain of the operation (nonpositive step, empty basis, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Unknown catalog entry.
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// N N* is not +E or -E for the declared signature.
class SignatureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The homogeneous intertwining system has only the zero solution.
class NoIntertwinerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A corepresentation could not be assembled from the given data.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace corepalg
