#pragma once

#include <stdexcept>
#include <string>

namespace qgraph {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// usage/parameter problems -> 2, resource caps -> 3, missing vertices -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPrimePower : public Error {
public:
    using Error::Error;
};

class LimitExceeded : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class AmbientMismatch : public Error {
public:
    using Error::Error;
};

class IdOutOfRange : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

} // namespace qgraph
