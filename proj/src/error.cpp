#include "dcycles/error.hpp"

namespace dcycles {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::NotTriangleFree: return "NotTriangleFree";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotStrong: return "NotStrong";
    case ErrorKind::NotTournament: return "NotTournament";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::BadResidue: return "BadResidue";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::InvalidSchema: return "InvalidSchema";
    case ErrorKind::NotOptimal: return "NotOptimal";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

ErrorClass classify(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadParameters:
    case ErrorKind::InvalidInput:
    case ErrorKind::BadResidue:
    case ErrorKind::BadLength:
      return ErrorClass::Usage;
    case ErrorKind::NotFound:
      return ErrorClass::Negative;
    case ErrorKind::SearchExhausted:
    case ErrorKind::ResourceBudgetExceeded:
    case ErrorKind::RetriesExhausted:
    case ErrorKind::GenerationFailed:
      return ErrorClass::Budget;
    default:
      return ErrorClass::Precondition;
  }
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

}  // namespace dcycles
