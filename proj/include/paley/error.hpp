#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paley {

/// Failure categories. The CLI maps each category onto an exit code.
enum class ErrorKind {
    BadDescriptor,
    BadArgument,
    NonPrime,
    ReducibleModulus,
    SizeCap,
    OrderUnavailable,
    NotCoprime,
    NoRepresentation,
    OddExtensionForInertPrime,
    NotRepresentable,
    MinimalityProbeFailed,
    HypothesisViolated,
    NonIntegralBracket,
    DirectedGraph,
    InvariantViolation,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BadDescriptor: return "BadDescriptor";
        case ErrorKind::BadArgument: return "BadArgument";
        case ErrorKind::NonPrime: return "NonPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::SizeCap: return "SizeCap";
        case ErrorKind::OrderUnavailable: return "OrderUnavailable";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::NoRepresentation: return "NoRepresentation";
        case ErrorKind::OddExtensionForInertPrime: return "OddExtensionForInertPrime";
        case ErrorKind::NotRepresentable: return "NotRepresentable";
        case ErrorKind::MinimalityProbeFailed: return "MinimalityProbeFailed";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::NonIntegralBracket: return "NonIntegralBracket";
        case ErrorKind::DirectedGraph: return "DirectedGraph";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace paley
