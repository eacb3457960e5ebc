#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace softev {

enum class ErrorKind {
    WeightSumNotOne,
    UnknownElement,
    DuplicateElement,
    MissingEntry,
    InvalidValue,
    SpaceMismatch,
    ZeroValidity,
    NotAProductSpace,
    NotFullSupport,
    NotDeterministic,
    DivisionBySupportGap,
    EmptyBlockWithMass,
    DegenerateEvent,
    DegenerateDenominator,
    ZeroMass,
    NonBinaryEvidenceSpace,
};

std::string_view to_string(ErrorKind kind);

/// Every failure of the probability calculus surfaces as a ProbError whose
/// kind() names the violated precondition.
class ProbError : public std::runtime_error {
public:
    ProbError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace softev
