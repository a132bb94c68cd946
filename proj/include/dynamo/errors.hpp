#pragma once

#include <stdexcept>
#include <string>

namespace dynamo {

// Exit-code classes used by the command line front end.
enum class ErrorClass { Usage = 1, Degenerate = 2, Internal = 3 };

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg, ErrorClass cls)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)), cls_(cls) {}
    const std::string& kind() const { return kind_; }
    ErrorClass error_class() const { return cls_; }

private:
    std::string kind_;
    ErrorClass cls_;
};

#define DYNAMO_ERROR(Name, Cls)                                                    \
    struct Name : Error {                                                          \
        explicit Name(const std::string& msg = "") : Error(#Name, msg, Cls) {}     \
    };

DYNAMO_ERROR(InexactDivision, ErrorClass::Degenerate)
DYNAMO_ERROR(DegenerateMap, ErrorClass::Degenerate)
DYNAMO_ERROR(DegreeMismatch, ErrorClass::Degenerate)
DYNAMO_ERROR(NonInvertible, ErrorClass::Degenerate)
DYNAMO_ERROR(NotPeriodic, ErrorClass::Degenerate)
DYNAMO_ERROR(BadPrime, ErrorClass::Degenerate)
DYNAMO_ERROR(InsufficientGoodPrimes, ErrorClass::Degenerate)
DYNAMO_ERROR(DepthCapExceeded, ErrorClass::Degenerate)
DYNAMO_ERROR(DegenerateParameter, ErrorClass::Degenerate)
DYNAMO_ERROR(ExcludedParameter, ErrorClass::Degenerate)
DYNAMO_ERROR(ClosureExceeded, ErrorClass::Degenerate)
DYNAMO_ERROR(RingMismatch, ErrorClass::Usage)
DYNAMO_ERROR(UnsupportedRing, ErrorClass::Usage)
DYNAMO_ERROR(UnknownFormat, ErrorClass::Usage)
DYNAMO_ERROR(UnboundSymbol, ErrorClass::Usage)
DYNAMO_ERROR(IndexOutOfRange, ErrorClass::Usage)
DYNAMO_ERROR(UnknownFamily, ErrorClass::Usage)
DYNAMO_ERROR(InvariantViolation, ErrorClass::Internal)

#undef DYNAMO_ERROR

struct SyntaxError : Error {
    SyntaxError(const std::string& msg, size_t pos)
        : Error("SyntaxError", msg + " at position " + std::to_string(pos), ErrorClass::Usage),
          position(pos) {}
    size_t position;
};

} // namespace dynamo
