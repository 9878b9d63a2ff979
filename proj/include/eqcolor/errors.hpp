#pragma once

#include <stdexcept>
#include <string>

namespace eqcolor {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input exceeds a hard size cap of an exponential routine.
class InstanceTooLarge : public Error {
public:
    explicit InstanceTooLarge(const std::string& msg) : Error(msg) {}
};

// m1/m2 outside [1, 1.8] after normalization.
class RatioOutOfRange : public Error {
public:
    explicit RatioOutOfRange(const std::string& msg) : Error(msg) {}
};

// A derived parameter fails one of the required inequalities.
class ConditionViolation : public Error {
public:
    explicit ConditionViolation(const std::string& msg) : Error(msg) {}
};

// Caller-supplied arguments break an operation's stated preconditions.
class PreconditionViolation : public Error {
public:
    explicit PreconditionViolation(const std::string& msg) : Error(msg) {}
};

// A recorded witness is no longer valid for its arc at execution time.
class StaleWitness : public Error {
public:
    explicit StaleWitness(const std::string& msg) : Error(msg) {}
};

// No strong component of the required size exists in the inaccessible part.
class NoBigComponent : public Error {
public:
    explicit NoBigComponent(const std::string& msg) : Error(msg) {}
};

// The solver reached a state the guarantees say cannot occur.  Carries a
// dump of the offending state so the instance can be replayed.
class TheoremViolation : public Error {
public:
    TheoremViolation(const std::string& msg, std::string dump)
        : Error(msg), state_dump(std::move(dump)) {}
    std::string state_dump;
};

}  // namespace eqcolor
