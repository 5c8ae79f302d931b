#pragma once

#include <stdexcept>
#include <string>

namespace ramond {

/// Malformed or incompatible configuration: mismatched rings, families,
/// algebras, or unknown names. The CLI maps this to exit status 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value outside the mathematical domain of an operation, e.g. a Laurent
/// parameter bound to zero or a negative power of a polynomial parameter.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. The CLI maps this to exit status 3.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

#define RAMOND_ASSERT(cond, msg)                                              \
    do {                                                                      \
        if (!(cond))                                                          \
            throw ::ramond::InvariantError(std::string("invariant: ") + msg); \
    } while (0)

} // namespace ramond
