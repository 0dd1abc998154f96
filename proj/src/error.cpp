#include "adelie/error.hpp"

namespace adelie {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IllegalType: return "IllegalType";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::NotInRootLattice: return "NotInRootLattice";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::DependentRoots: return "DependentRoots";
    case ErrorCode::ConstructionFailure: return "ConstructionFailure";
    case ErrorCode::SystemMismatch: return "SystemMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NonUniqueMinimal: return "NonUniqueMinimal";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CancellationFailure: return "CancellationFailure";
    case ErrorCode::IncompleteOracle: return "IncompleteOracle";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::NotARootClass: return "NotARootClass";
  }
  return "Unknown";
}

}  // namespace adelie
