#pragma once

#include <stdexcept>
#include <string>

namespace qframe {

// Base for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-domain input (interval missing the binal point,
// bad sign character, division by zero, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// A stated precondition does not hold (non-canonical operand, non-Cauchy
// input to an equivalence test, ...).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

// A type invariant was violated (norm drift, non-unitary gauge, weights
// not summing to one, ...).
class invariant_error : public error {
public:
    explicit invariant_error(const std::string& what) : error(what) {}
};

// Operation not defined for the given variant (complex ordering, superposed
// element in a basis-only check, ...).
class unsupported_error : public error {
public:
    explicit unsupported_error(const std::string& what) : error(what) {}
};

// Document parse failure; position is a byte offset where known, or -1.
class parse_error : public error {
public:
    parse_error(const std::string& what, long long position = -1)
        : error(position >= 0 ? what + " (at byte " + std::to_string(position) + ")" : what),
          position_(position) {}
    long long position() const { return position_; }

private:
    long long position_;
};

// Configured resource cap exceeded (frame-field size, logical register width).
class resource_error : public error {
public:
    explicit resource_error(const std::string& what) : error(what) {}
};

} // namespace qframe
