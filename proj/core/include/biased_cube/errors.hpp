#pragma once

#include <stdexcept>
#include <string>

namespace bcube {

// Argument outside the mathematical domain of an operation (alpha > 1/2,
// p < 1, q outside [1,2], non-Boolean input to an FKN check, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Two operands that live on different cubes (different n or bias).
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed function/spectrum/coefficient file.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bcube
