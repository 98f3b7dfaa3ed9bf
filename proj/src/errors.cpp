#include "maxcurves/errors.hpp"

namespace maxcurves {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::EvenOrSmallN: return "EvenOrSmallN";
        case Errc::BadParameter: return "BadParameter";
        case Errc::TowerTooLarge: return "TowerTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::BadSubfieldOrder: return "BadSubfieldOrder";
        case Errc::NotInQuadraticSubfield: return "NotInQuadraticSubfield";
        case Errc::BadExponent: return "BadExponent";
        case Errc::BadOrder: return "BadOrder";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::UnknownCover: return "UnknownCover";
        case Errc::PrecisionTooLow: return "PrecisionTooLow";
        case Errc::InvalidEdge: return "InvalidEdge";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::IncompatibleSubgroup: return "IncompatibleSubgroup";
        case Errc::InfinityInput: return "InfinityInput";
        case Errc::PointNotOnCurve: return "PointNotOnCurve";
        case Errc::InvalidElement: return "InvalidElement";
        case Errc::GenusTooSmall: return "GenusTooSmall";
    }
    return "Unknown";
}

}  // namespace maxcurves
