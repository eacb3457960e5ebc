#include "softev/error.hpp"

namespace softev {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::WeightSumNotOne: return "WeightSumNotOne";
        case ErrorKind::UnknownElement: return "UnknownElement";
        case ErrorKind::DuplicateElement: return "DuplicateElement";
        case ErrorKind::MissingEntry: return "MissingEntry";
        case ErrorKind::InvalidValue: return "InvalidValue";
        case ErrorKind::SpaceMismatch: return "SpaceMismatch";
        case ErrorKind::ZeroValidity: return "ZeroValidity";
        case ErrorKind::NotAProductSpace: return "NotAProductSpace";
        case ErrorKind::NotFullSupport: return "NotFullSupport";
        case ErrorKind::NotDeterministic: return "NotDeterministic";
        case ErrorKind::DivisionBySupportGap: return "DivisionBySupportGap";
        case ErrorKind::EmptyBlockWithMass: return "EmptyBlockWithMass";
        case ErrorKind::DegenerateEvent: return "DegenerateEvent";
        case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorKind::ZeroMass: return "ZeroMass";
        case ErrorKind::NonBinaryEvidenceSpace: return "NonBinaryEvidenceSpace";
    }
    return "UnknownError";
}

}  // namespace softev
