#pragma once

#include <stdexcept>
#include <string>

namespace tdl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Enumeration would exceed the configured value-count budget.
class MemoryBudgetError : public Error {
public:
    using Error::Error;
};

class CombinatorialBudgetError : public Error {
public:
    using Error::Error;
};

class NoNonDegenerateSimplex : public Error {
public:
    using Error::Error;
};

class EmptySweepError : public Error {
public:
    using Error::Error;
};

// Spatial grid too small to represent the integrand exactly.
class AliasError : public Error {
public:
    using Error::Error;
};

class ZeroFieldError : public Error {
public:
    using Error::Error;
};

class InsufficientSamplesError : public Error {
public:
    using Error::Error;
};

class NonPositiveSampleError : public Error {
public:
    using Error::Error;
};

// NaN/Inf encountered mid-computation; carries the time it appeared at.
class NonFiniteError : public Error {
public:
    NonFiniteError(const std::string& what, double time)
        : Error(what), time_(time) {}
    double time() const { return time_; }

private:
    double time_ = 0.0;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace tdl
