#pragma once

#include <stdexcept>
#include <string>

namespace ratbase {

/// Domain error categories, mapped to distinct CLI exit behaviour.
enum class ErrorKind {
    NotCoprime,
    OrderViolation,
    DigitNotInB,
    DigitNotInAq,
    PreconditionViolated,
    NotAccepted,
    InternalInconsistency,
    ParseError,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    const char* kind_name() const {
        switch (kind_) {
            case ErrorKind::NotCoprime: return "NotCoprime";
            case ErrorKind::OrderViolation: return "OrderViolation";
            case ErrorKind::DigitNotInB: return "DigitNotInB";
            case ErrorKind::DigitNotInAq: return "DigitNotInAq";
            case ErrorKind::PreconditionViolated: return "PreconditionViolated";
            case ErrorKind::NotAccepted: return "NotAccepted";
            case ErrorKind::InternalInconsistency: return "InternalInconsistency";
            case ErrorKind::ParseError: return "ParseError";
            case ErrorKind::Io: return "Io";
        }
        return "Unknown";
    }

private:
    ErrorKind kind_;
};

} // namespace ratbase
