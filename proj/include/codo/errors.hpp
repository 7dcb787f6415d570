#pragma once

#include <stdexcept>
#include <string>

namespace codo {

/// Base of every error the library raises. `kind()` names the failure in
/// the vocabulary used by reports and the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what) : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define CODO_ERROR(Name)                                                        \
    class Name : public Error {                                                 \
    public:                                                                     \
        explicit Name(const std::string& what = {}) : Error(#Name, what) {}     \
    };

CODO_ERROR(IllFoundedExtension)
CODO_ERROR(DuplicateName)
CODO_ERROR(DivisionByZero)
CODO_ERROR(TowerMismatch)
CODO_ERROR(ParseError)
CODO_ERROR(NonCommutingPair)
CODO_ERROR(OrderNotDivisible)
CODO_ERROR(NonMonic)
CODO_ERROR(InvalidAutomorphism)
CODO_ERROR(XDependentResultant)
CODO_ERROR(RankTooSmall)
CODO_ERROR(XDependentResidual)
CODO_ERROR(DegreeMismatch)
CODO_ERROR(DegenerateRoot)
CODO_ERROR(CurveMismatch)
CODO_ERROR(SeriesExtractionFailure)
CODO_ERROR(SingularLinearSystem)
CODO_ERROR(NoSolutionAtBound)
CODO_ERROR(UnknownFixture)

#undef CODO_ERROR

}  // namespace codo
