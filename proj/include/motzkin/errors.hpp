#pragma once

#include <stdexcept>
#include <string>

namespace motzkin {

// Base of every error this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// A first-return split or crossing test was asked of a path not starting with U.
class NotUStart : public Error {
public:
    using Error::Error;
};

// Brute-force enumeration or generation would exceed the configured cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class PoleAtPoint : public Error {
public:
    using Error::Error;
};

class NotAPowerSeries : public Error {
public:
    using Error::Error;
};

class UnknownClass : public Error {
public:
    using Error::Error;
};

class EmptyAtLength : public Error {
public:
    using Error::Error;
};

// Safety guard on searches that are expected to terminate.
class IterationCap : public Error {
public:
    using Error::Error;
};

}  // namespace motzkin
