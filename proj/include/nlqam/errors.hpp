#pragma once

#include <stdexcept>

namespace nlqam {

// Error taxonomy mirrored by the CLI exit codes: usage 1, data/parse 2,
// model domain 3. Non-convergence is reported through result flags, not
// exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller-supplied parameter is outside its documented range.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// Input data (levels, constellations, sweeps) violates an invariant.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Malformed file contents; the message cites the offending location.
class ParseError : public Error {
public:
    using Error::Error;
};

// The closed-form link model was evaluated outside its validity region,
// e.g. 1 + c*kurtosis <= 0.
class ModelDomainError : public Error {
public:
    using Error::Error;
};

// A computation produced a non-finite intermediate.
class NumericError : public Error {
public:
    using Error::Error;
};

// Least-squares fit is degenerate or under-determined.
class FitError : public Error {
public:
    using Error::Error;
};

}  // namespace nlqam
