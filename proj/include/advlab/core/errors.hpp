#pragma once

#include <stdexcept>
#include <string>

namespace advlab {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

// An exact oracle gave up because its node budget ran out.
class ResourceExceeded : public Error {
public:
    using Error::Error;
};

// A proved bound failed on a constructed plan. Always an oracle bug.
class InternalBoundViolation : public Error {
public:
    using Error::Error;
};

class MalformedAdvice : public Error {
public:
    using Error::Error;
};

// Advice that decodes fine but cannot be followed by the online rules.
class AdviceInconsistency : public Error {
public:
    using Error::Error;
};

class CapacityViolation : public Error {
public:
    using Error::Error;
};

class NormalizationFailure : public Error {
public:
    using Error::Error;
};

class DegenerateInstance : public Error {
public:
    using Error::Error;
};

// The lower-bound adversary cannot win: 2^b >= m^k.
class BudgetTooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace advlab
