#pragma once

#include <stdexcept>
#include <string>

namespace aztec {

// Precondition violated by the caller (bad n, point outside a domain, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation would exceed the configured memory budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two routes that must agree exactly did not.
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class DivisionByZeroError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace aztec
