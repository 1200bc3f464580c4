#include "ec/error.hpp"

namespace ec {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::CompositionDiverges: return "CompositionDiverges";
        case ErrorKind::BadConstantTerm: return "BadConstantTerm";
        case ErrorKind::NotCompositionallyInvertible: return "NotCompositionallyInvertible";
        case ErrorKind::ImproperRational: return "ImproperRational";
        case ErrorKind::WindowTooShort: return "WindowTooShort";
        case ErrorKind::NoDominantRealRoot: return "NoDominantRealRoot";
        case ErrorKind::NoRecurrenceFound: return "NoRecurrenceFound";
        case ErrorKind::KindMismatch: return "KindMismatch";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::LoopPresent: return "LoopPresent";
        case ErrorKind::NotEulerian: return "NotEulerian";
        case ErrorKind::BadSpec: return "BadSpec";
        case ErrorKind::NotSkewSymmetric: return "NotSkewSymmetric";
        case ErrorKind::OddDimension: return "OddDimension";
        case ErrorKind::CyclicGraph: return "CyclicGraph";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::NotComparable: return "NotComparable";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotGraded: return "NotGraded";
        case ErrorKind::NotEulerianPoset: return "NotEulerianPoset";
        case ErrorKind::NotLattice: return "NotLattice";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::PrimeInstability: return "PrimeInstability";
        case ErrorKind::NotCentral: return "NotCentral";
        case ErrorKind::AxiomViolation: return "AxiomViolation";
        case ErrorKind::BadSubset: return "BadSubset";
        case ErrorKind::NotGraphic: return "NotGraphic";
        case ErrorKind::Unbounded: return "Unbounded";
        case ErrorKind::ScanTooLarge: return "ScanTooLarge";
        case ErrorKind::NonIntegralHStar: return "NonIntegralHStar";
        case ErrorKind::NotTwoDimensional: return "NotTwoDimensional";
        case ErrorKind::NotLatticePolygon: return "NotLatticePolygon";
        case ErrorKind::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

}  // namespace ec
