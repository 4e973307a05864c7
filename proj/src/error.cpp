#include "hss/error.hpp"

namespace hss {

const char* err_name(Err e) {
  switch (e) {
    case Err::NonPositiveOrder: return "NonPositiveOrder";
    case Err::GroupMismatch: return "GroupMismatch";
    case Err::NotAssociative: return "NotAssociative";
    case Err::BadUnit: return "BadUnit";
    case Err::SingularMetric: return "SingularMetric";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NotCentral: return "NotCentral";
    case Err::NotInvertible: return "NotInvertible";
    case Err::OrderViolation: return "OrderViolation";
    case Err::OpenSlot: return "OpenSlot";
    case Err::DuplicateSlot: return "DuplicateSlot";
    case Err::NonOrientableGluing: return "NonOrientableGluing";
    case Err::Disconnected: return "Disconnected";
    case Err::OddChi: return "OddChi";
    case Err::NotAdjacent: return "NotAdjacent";
    case Err::SelfGluing: return "SelfGluing";
    case Err::MultiSharedEdge: return "MultiSharedEdge";
    case Err::BadVertex: return "BadVertex";
    case Err::PlanOverflow: return "PlanOverflow";
    case Err::TooLarge: return "TooLarge";
    case Err::SyntaxError: return "SyntaxError";
    case Err::UnknownGenerator: return "UnknownGenerator";
    case Err::TypeMismatch: return "TypeMismatch";
    case Err::NegativeGenus: return "NegativeGenus";
    case Err::BadFile: return "BadFile";
  }
  return "UnknownError";
}

}  // namespace hss
