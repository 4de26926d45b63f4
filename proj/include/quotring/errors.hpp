#pragma once

#include <stdexcept>
#include <string>

namespace quotring {

/// Base type for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class SearchExhausted : public Error {
public:
    using Error::Error;
};

class InvalidRing : public Error {
public:
    using Error::Error;
};

class InvalidModulus : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

class NotAUnit : public Error {
public:
    using Error::Error;
};

class Unsolvable : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class InvalidChain : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotAMember : public Error {
public:
    using Error::Error;
};

class SamplingExhausted : public Error {
public:
    using Error::Error;
};

class SingularInput : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace quotring
