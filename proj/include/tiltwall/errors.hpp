#pragma once

#include <stdexcept>
#include <string>

namespace tiltwall {

enum class ErrorKind {
  Parse,
  InvalidArgument,
  RankZero,
  ChOneZero,
  CoincidentPoints,
  NoIntersection,
  VerticalLine,
  NotInU,
  DegenerateBG,
  NonIntegerEuler,
  ZeroClass,
  DegenerateClass,
  NegativeDiscriminant,
  UnboundedSearch,
  InconsistentDecomposition,
  OutOfRange,
  InvalidTriple,
  NonPositiveC,
  SlopeMismatch,
  NotBaseCase,
  NonMinusOneRank,
  ModelAssumption,
  Admissibility,
};

const char* name_of(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// CLI exit status: 0 ok, 1 parse/input, 2 limits, 3 model assumption, 4 admissibility.
int exit_code_for(ErrorKind kind);

}  // namespace tiltwall
