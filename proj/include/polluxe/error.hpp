#pragma once

#include <stdexcept>
#include <string>

namespace polluxe {

enum class ErrorKind {
    InvalidConfig,   // malformed input or out-of-range parameter
    Parse,           // unparseable rational / JSON
    Axiom,           // spectral data violates a structural axiom
    DivisorZero,
    NotDivisible,
    ZeroSeries,
    LevelTooLow,
    MismatchedPrime,
    CentralCritOnly,
    OddPurityWeight,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by the spectral constructor; `axiom()` names the violated condition
/// ("dominance", "purity", "pairing", ...).
class AxiomError : public Error {
public:
    AxiomError(std::string axiom, const std::string& detail)
        : Error(ErrorKind::Axiom, axiom + ": " + detail), axiom_(std::move(axiom)) {}

    const std::string& axiom() const noexcept { return axiom_; }

private:
    std::string axiom_;
};

} // namespace polluxe
