#ifndef HAARGAP_ERROR_HPP
#define HAARGAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace haargap {

/// Malformed input: bad dimension, off-trace direction, out-of-range index.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or LP would exceed a configured size limit.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical check refused to run on an under-resolved grid.
class ResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace haargap

#endif // HAARGAP_ERROR_HPP
