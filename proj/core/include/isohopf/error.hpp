#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isohopf {

enum class Errc {
  InvalidArgument,
  RingMismatch,
  ParseError,
  DegreeZeroInput,
  NotDivisible,
  ResourceExhausted,
  NotZeroDimensional,
  NotContained,
  NotFiniteLength,
  EmptyScheme,
  DegenerateSlice,
  DimensionMismatch,
  Singular,
  ZeroVector,
  NotMaximalIsotropic,
  NoRationalSplitting,
  NotIsotropic,
  ZeroLocusNotOriginOnly,
  BadWeights,
  WrongDimension,
  PerturbationFailed,
  ConsistencyFailure,
  NotHomogeneous,
  ComplexNotExact2Periodic,
  NoInvariantIsotropic,
  NonIntegerRatio,
  ZeroBaseWeight,
  WeightConstraintViolated,
  SectionNotInSubspace,
  CloseRoots,
  RankAmbiguous,
  ResidualTooLarge,
  BudgetExceeded,
  WindingMismatch,
  SchemaError,
  UnknownRoute,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

}  // namespace isohopf
