#pragma once

#include <stdexcept>
#include <string>

namespace tclp {

// Base for every error the library raises on bad input or violated
// preconditions. Subclasses map onto the CLI exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument ranges, malformed solutions, bad solver parameters.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent input files.
class InputError : public Error {
public:
    using Error::Error;
};

// A configured resource cap (e.g. the enumeration budget) was exceeded.
class SizeError : public Error {
public:
    using Error::Error;
};

} // namespace tclp
