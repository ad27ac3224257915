#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bifur {

// Expression-level failure; `offset` is the byte position in the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t offset)
        : std::runtime_error(std::move(msg)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A configured resource budget was exhausted (e.g. Groebner pair queue).
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance exceeds the documented size bounds (support size, dimension).
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Iterative root refinement failed to reach the requested tolerance.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(std::string msg, double residual)
        : std::runtime_error(std::move(msg)), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// A value-set projection came out zero-dimensional in the wrong sense:
// the eliminant ideal is (0), so the value set is not finite.
class NonFiniteValueSet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A sampled family member is constant on S, so the dominance proxy fails.
class DominanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bifur
