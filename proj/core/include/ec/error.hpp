#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ec {

enum class ErrorKind {
    NotInvertible,
    CompositionDiverges,
    BadConstantTerm,
    NotCompositionallyInvertible,
    ImproperRational,
    WindowTooShort,
    NoDominantRealRoot,
    NoRecurrenceFound,
    KindMismatch,
    UnknownVertex,
    LoopPresent,
    NotEulerian,
    BadSpec,
    NotSkewSymmetric,
    OddDimension,
    CyclicGraph,
    NotSquare,
    NotAntisymmetric,
    CycleDetected,
    NotComparable,
    TooLarge,
    NotGraded,
    NotEulerianPoset,
    NotLattice,
    NotPrime,
    PrimeInstability,
    NotCentral,
    AxiomViolation,
    BadSubset,
    NotGraphic,
    Unbounded,
    ScanTooLarge,
    NonIntegralHStar,
    NotTwoDimensional,
    NotLatticePolygon,
    BadArgument,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ec
