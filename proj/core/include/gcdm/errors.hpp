#pragma once

#include <stdexcept>
#include <string>

namespace gcdm {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// A coordinate pair or weight component lies outside the triangle of
// admissible weight vectors.
class OutsideSimplexError : public Error {
public:
    using Error::Error;
};

// A charge fraction is not representable on the requested ground line,
// or two fractions disagree about the charge step q.
class InconsistentReferenceError : public Error {
public:
    using Error::Error;
};

// A nonzero charge fraction lies on the opposite side of the neutral axis
// from its reference fraction.
class SignMismatchError : public Error {
public:
    using Error::Error;
};

// Two reference fractions that must describe the same half of the triangle
// lie on opposite sides of the neutral axis.
class SideMismatchError : public Error {
public:
    using Error::Error;
};

// A finite-difference stencil would leave the interior of the triangle.
class BoundaryTooCloseError : public Error {
public:
    using Error::Error;
};

// Ensemble weights are negative or do not sum to one.
class WeightSumError : public Error {
public:
    using Error::Error;
};

// A weight refers to a particle-number sector absent from the model space.
class UnknownSectorError : public Error {
public:
    using Error::Error;
};

// An observable matrix does not match the model space dimension.
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

// The ionization energy of a domain is not strictly positive.
class NonPositiveIonizationError : public Error {
public:
    using Error::Error;
};

// Removing q electrons would leave a negative electron count.
class ElectronCountUnderflowError : public Error {
public:
    using Error::Error;
};

// A catalog document is malformed.
class ParseError : public Error {
public:
    using Error::Error;
};

// Two catalog records share a label.
class DuplicateLabelError : public ParseError {
public:
    using ParseError::ParseError;
};

// A catalog record lacks a field its energy mode requires.
class MissingFieldError : public ParseError {
public:
    using ParseError::ParseError;
};

// A catalog record carries fields that contradict its energy mode.
class ModeConflictError : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace gcdm
