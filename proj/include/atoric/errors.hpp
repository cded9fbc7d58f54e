#ifndef ATORIC_ERRORS_HPP
#define ATORIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atoric {

/// Malformed or invalid user input (bad matrix, bad polynomial text, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in polynomial text; `position` is a 0-based byte offset.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// rank(P_A * V_f) == 0: the Hadamard product has codimension 2.
class NotHypersurfaceError : public std::runtime_error {
public:
    NotHypersurfaceError() : std::runtime_error("not a hypersurface") {}
};

/// An internal consistency check failed (a bug or a violated theoretical guarantee).
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The interpolation system did not have a one-dimensional solution space.
class NullspaceError : public InconsistencyError {
public:
    explicit NullspaceError(std::size_t dimension)
        : InconsistencyError(dimension == 0 ? "nullspace dimension 0"
                                            : "nullspace dimension " + std::to_string(dimension) +
                                                  " (expected 1)"),
          dimension_(dimension) {}

    std::size_t dimension() const noexcept { return dimension_; }

private:
    std::size_t dimension_;
};

/// No sufficiently generic weight vector was found within the retry budget.
class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace atoric

#endif
