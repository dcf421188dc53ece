#ifndef ECGDN_ERRORS_HPP
#define ECGDN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ecgdn {

// Malformed or inconsistent input data (bad files, invariant violations,
// unknown names). Maps to CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (divergence, non-finite intermediates). CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ecgdn

#endif
