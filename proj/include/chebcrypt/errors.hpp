// Exception hierarchy shared by all chebcrypt components.
#pragma once

#include <stdexcept>
#include <string>

namespace chebcrypt {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// bigreal
struct ParseError : Error {
    using Error::Error;
};
struct PrecisionTooLow : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};

// chebyshev
struct DegreeTooLarge : Error {
    using Error::Error;
};

// modfield
struct BadParams : Error {
    using Error::Error;
};
struct InsufficientShares : Error {
    using Error::Error;
};
struct DuplicateAbscissa : Error {
    using Error::Error;
};
struct NotInvertible : Error {
    using Error::Error;
};

// protocols
struct KeyMismatch : Error {
    using Error::Error;
};
struct MaskTooSmall : Error {
    using Error::Error;
};
struct DecryptOutOfTolerance : Error {
    using Error::Error;
};
struct VerifyFailed : Error {
    using Error::Error;
};

// wire
struct MalformedMessage : Error {
    using Error::Error;
};
struct ConfigMismatch : Error {
    using Error::Error;
};
struct AuthFailed : Error {
    using Error::Error;
};
struct Timeout : Error {
    using Error::Error;
};
struct SocketError : Error {
    using Error::Error;
};

}  // namespace chebcrypt
