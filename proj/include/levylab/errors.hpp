#pragma once

#include <stdexcept>
#include <string>

namespace levylab {

/// Base for every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidModel : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Complex frequency outside the strip where the exponential moment exists.
class StripViolation : public Error {
public:
    using Error::Error;
};

/// The positive-jump integral of (e^z - 1) diverges.
class DivergentPositiveJumps : public Error {
public:
    using Error::Error;
};

class NonIntegrable : public Error {
public:
    using Error::Error;
};

class NumericalFailure : public Error {
public:
    using Error::Error;
};

class BracketFailure : public Error {
public:
    using Error::Error;
};

class GridTooCoarse : public Error {
public:
    using Error::Error;
};

class UnsupportedRegime : public Error {
public:
    using Error::Error;
};

class EmptyExerciseRegion : public Error {
public:
    using Error::Error;
};

class BoundViolation : public Error {
public:
    BoundViolation(const std::string& what, double worst_x, double worst_tau)
        : Error(what), worst_x_(worst_x), worst_tau_(worst_tau) {}
    double worst_x() const { return worst_x_; }
    double worst_tau() const { return worst_tau_; }

private:
    double worst_x_;
    double worst_tau_;
};

class RegimeMismatch : public Error {
public:
    using Error::Error;
};

class MissingYStar : public Error {
public:
    using Error::Error;
};

class Unconverged : public Error {
public:
    using Error::Error;
};

}  // namespace levylab
