#pragma once
#include <stdexcept>
#include <string>

namespace mbs {

/// Malformed or inconsistent input (non-spanning lists, rank-deficient
/// bases, zero vectors where forbidden, bad files).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A point or parameter fails a genericity requirement (witness on a wall,
/// evaluation point on a cone facet, non-generic beta).
class GenericityError : public std::runtime_error {
public:
    explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mbs
