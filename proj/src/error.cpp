#include "sgp/error.hpp"

namespace sgp {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::NotInSemigroup: return "NotInSemigroup";
    case Errc::BelowConductor: return "BelowConductor";
    case Errc::MbarTooSmall: return "MbarTooSmall";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotDim2: return "NotDim2";
    case Errc::BaseIsWholeGround: return "BaseIsWholeGround";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::BadField: return "BadField";
    case Errc::BadStrip: return "BadStrip";
    case Errc::EmptySet: return "EmptySet";
  }
  return "Unknown";
}

}  // namespace sgp
