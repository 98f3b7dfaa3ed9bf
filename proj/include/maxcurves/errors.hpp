#pragma once

#include <stdexcept>
#include <string>

namespace maxcurves {

enum class Errc {
    NonPrime,
    EvenOrSmallN,
    BadParameter,
    TowerTooLarge,
    DivisionByZero,
    BadSubfieldOrder,
    NotInQuadraticSubfield,
    BadExponent,
    BadOrder,
    BudgetExceeded,
    UnknownCover,
    PrecisionTooLow,
    InvalidEdge,
    HypothesisViolated,
    IncompatibleSubgroup,
    InfinityInput,
    PointNotOnCurve,
    InvalidElement,
    GenusTooSmall,
};

const char* errc_name(Errc code);

/// Library-wide exception; `code()` identifies the failed precondition.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace maxcurves
