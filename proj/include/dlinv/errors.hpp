#pragma once

#include <stdexcept>
#include <string>

namespace dlinv {

// Malformed or inconsistent user input (duplicate nodes, short sequences, bad literals).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation asked for more coefficients than a truncated object stores.
class PrecisionError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class NotInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Composition f(g) with g(0) != 0.
class CompositionDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnknownVariableError : public std::invalid_argument {
public:
    explicit UnknownVariableError(const std::string& name)
        : std::invalid_argument("unknown indeterminate '" + name + "'"), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// A ring law was broken (e.g. a division that must be exact left a remainder).
// Never expected in a correct build.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Requested work exceeds a configured size budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dlinv
