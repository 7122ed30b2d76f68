#pragma once

#include <stdexcept>
#include <string>

namespace tbm {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A subset expression or entry names an atom that is not in the frame.
class UnknownAtomError : public Error {
   public:
    explicit UnknownAtomError(const std::string& atom)
        : Error("unknown atom '" + atom + "'"), atom_(atom) {}
    [[nodiscard]] const std::string& atom() const noexcept { return atom_; }

   private:
    std::string atom_;
};

/// Frame exceeds the configured atom cap.
class FrameTooLargeError : public Error {
   public:
    using Error::Error;
};

/// A probability or possibility input is not normalized.
class NotNormalizedError : public Error {
   public:
    using Error::Error;
};

/// A probability atom value is negative.
class NegativeValueError : public Error {
   public:
    using Error::Error;
};

/// A basic belief mass is negative where nonnegativity is required.
class NegativeMassError : public Error {
   public:
    using Error::Error;
};

/// Mass values do not sum to one.
class InvalidMassError : public Error {
   public:
    using Error::Error;
};

/// Two spaces cannot be combined (different atom counts).
class NotCombinableError : public Error {
   public:
    using Error::Error;
};

/// Mixing coefficient outside [0, 1].
class AlphaOutOfRangeError : public Error {
   public:
    using Error::Error;
};

/// All mass ended up on the empty set; normalization impossible.
class TotalConflictError : public Error {
   public:
    using Error::Error;
};

/// Bayesian conditioning on an event of pignistic probability zero.
class ZeroProbabilityEventError : public Error {
   public:
    using Error::Error;
};

/// Two operands live on different frames.
class FrameMismatchError : public Error {
   public:
    using Error::Error;
};

/// Malformed input file or expression.
class ParseError : public Error {
   public:
    using Error::Error;
};

/// Input failed axiom validation where a valid capacity is required.
class ValidationError : public Error {
   public:
    using Error::Error;
};

}  // namespace tbm
