#pragma once

#include <stdexcept>
#include <string>

namespace ncnewton {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A ring operation mixed incompatible element kinds (rational vs. block,
/// or blocks of different dimension).
class VariantMismatchError : public Error {
public:
    explicit VariantMismatchError(const std::string& msg) : Error(msg) {}
};

/// The element has no two-sided multiplicative inverse.
class NotInvertibleError : public Error {
public:
    explicit NotInvertibleError(const std::string& msg) : Error(msg) {}
};

/// An index sequence referenced a row or column outside the matrix.
class IndexOutOfBoundsError : public Error {
public:
    explicit IndexOutOfBoundsError(const std::string& msg) : Error(msg) {}
};

/// An index sequence contained a repeated index.
class DuplicateIndexError : public Error {
public:
    explicit DuplicateIndexError(const std::string& msg) : Error(msg) {}
};

/// Interpolation nodes were not pairwise distinct.
class DuplicateNodeError : public Error {
public:
    explicit DuplicateNodeError(const std::string& msg) : Error(msg) {}
};

/// A Gram matrix failed the symmetry / positive-definiteness check.
class NotPositiveDefiniteError : public Error {
public:
    explicit NotPositiveDefiniteError(const std::string& msg) : Error(msg) {}
};

/// The input matrix is not generic: some step of an exact elimination or of
/// the biorthogonalization found no invertible pivot. `order` is the step
/// (equivalently, the truncation order) at which the failure occurred.
class NonGenericError : public Error {
public:
    NonGenericError(int order, const std::string& msg)
        : Error(msg + " (order " + std::to_string(order) + ")"), order_(order) {}

    int order() const noexcept { return order_; }

private:
    int order_;
};

/// Malformed JSON text.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Well-formed JSON with the wrong shape or content for the schema.
class SchemaError : public Error {
public:
    SchemaError(std::string location, const std::string& msg)
        : Error(msg), location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

}  // namespace ncnewton
