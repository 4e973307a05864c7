#pragma once

#include <stdexcept>
#include <string>

namespace hss {

/// Every failure mode the library reports, by name.
enum class Err {
  // group
  NonPositiveOrder,
  GroupMismatch,
  // algebra / action
  NotAssociative,
  BadUnit,
  SingularMetric,
  DimensionMismatch,
  NotCentral,
  NotInvertible,
  OrderViolation,
  // surface
  OpenSlot,
  DuplicateSlot,
  NonOrientableGluing,
  Disconnected,
  OddChi,
  NotAdjacent,
  SelfGluing,
  MultiSharedEdge,
  BadVertex,
  // state sum
  PlanOverflow,
  TooLarge,
  // word language
  SyntaxError,
  UnknownGenerator,
  TypeMismatch,
  NegativeGenus,
  // files
  BadFile,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& detail)
      : std::runtime_error(std::string(err_name(kind)) + ": " + detail),
        kind_(kind) {}

  Err kind() const { return kind_; }
  const char* name() const { return err_name(kind_); }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace hss
