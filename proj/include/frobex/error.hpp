#ifndef FROBEX_ERROR_HPP
#define FROBEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace frobex {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size or search bound was exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Operands live in cyclotomic fields of different conductor.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// The field cannot host a requested scalar (root of unity, square root, embedding).
class FieldError : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Malformed text or JSON input; the message carries the position.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was called on data that fails its stated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace frobex

#endif // FROBEX_ERROR_HPP
