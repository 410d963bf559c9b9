#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

struct SkeinError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimitiveInput : SkeinError {
    using SkeinError::SkeinError;
};

struct ZeroDeterminant : SkeinError {
    using SkeinError::SkeinError;
};

struct NotDetTwo : SkeinError {
    using SkeinError::SkeinError;
};

struct NotMaxThread : SkeinError {
    using SkeinError::SkeinError;
};

/// Raised when no closed-form rule covers an ordered basis product.
/// `left`/`right` hold the rendered keys, `classification` the case name.
struct UnsupportedProduct : SkeinError {
    UnsupportedProduct(std::string left, std::string right, std::string classification,
                       std::string detail)
        : SkeinError("unsupported product " + left + " * " + right + " [" + classification +
                     "]: " + detail),
          left(std::move(left)),
          right(std::move(right)),
          classification(std::move(classification)),
          detail(std::move(detail)) {}

    std::string left;
    std::string right;
    std::string classification;
    std::string detail;
};

struct SyntaxError : SkeinError {
    SyntaxError(std::size_t offset, const std::string& what)
        : SkeinError("syntax error at offset " + std::to_string(offset) + ": " + what),
          offset(offset) {}

    std::size_t offset;
};

struct SemanticError : SkeinError {
    SemanticError(std::size_t offset, const std::string& what)
        : SkeinError("semantic error at offset " + std::to_string(offset) + ": " + what),
          offset(offset) {}

    std::size_t offset;
};

}  // namespace skein
