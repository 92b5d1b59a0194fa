// Error taxonomy shared by all iicrypt modules.
//
// Everything derives from iicrypt::Error so callers can catch the whole
// family, while the CLI maps the mid-level categories (InvalidArgument,
// KeyParseError, DimensionMismatch, IoError) onto its exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace iicrypt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raster or geometry dimensions disagree.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A numeric or structural precondition on an argument was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NonPositiveDistance : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class IndexOutOfRange : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DepthNotConvertible : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class InvalidPixelIndex : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class ZeroSeed : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class ParamOutOfRange : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class LengthMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotABijection : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class FractionOutOfRange : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Key file could not be parsed or violates a key invariant.
class KeyParseError : public Error {
public:
    using Error::Error;
};

// File level problems (open/read/write failures and format issues).
class IoError : public Error {
public:
    using Error::Error;
};

class UnsupportedFormat : public IoError {
public:
    using IoError::IoError;
};

class CorruptHeader : public IoError {
public:
    using IoError::IoError;
};

} // namespace iicrypt
