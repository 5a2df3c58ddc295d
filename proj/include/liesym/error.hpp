#pragma once

#include <stdexcept>
#include <string>

namespace liesym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rational function was evaluated at a root of its denominator.
class PoleAtK : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An exact scaling t^lambda is not representable in the requested number type.
class NonRationalPower : public Error {
public:
    using Error::Error;
};

/// Two radicals with incommensurable radicands were added.
class IncommensurableSurds : public Error {
public:
    using Error::Error;
};

class UnsupportedGenerator : public Error {
public:
    using Error::Error;
};

class SeriesDoesNotTerminate : public Error {
public:
    using Error::Error;
};

class NotClosed : public Error {
public:
    using Error::Error;
};

class RelationMismatch : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

}  // namespace liesym
