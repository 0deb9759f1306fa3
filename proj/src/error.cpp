#include "valparam/error.hpp"

namespace valparam {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MixedCuts: return "MixedCuts";
        case ErrorKind::InconsistentLimit: return "InconsistentLimit";
        case ErrorKind::UndeterminedSup: return "UndeterminedSup";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ValueNotInGroup: return "ValueNotInGroup";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::NotPseudoCauchy: return "NotPseudoCauchy";
        case ErrorKind::GeneratorMissing: return "GeneratorMissing";
        case ErrorKind::AmbiguousAtLimit: return "AmbiguousAtLimit";
        case ErrorKind::NotStable: return "NotStable";
        case ErrorKind::Undetermined: return "Undetermined";
        case ErrorKind::Inconclusive: return "Inconclusive";
        case ErrorKind::EvaluatorFailure: return "EvaluatorFailure";
        case ErrorKind::NotStrictlyNested: return "NotStrictlyNested";
        case ErrorKind::InvalidWitness: return "InvalidWitness";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace valparam
