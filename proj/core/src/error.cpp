#include "isohopf/error.hpp"

namespace isohopf {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::DegreeZeroInput: return "DegreeZeroInput";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::ResourceExhausted: return "ResourceExhausted";
    case Errc::NotZeroDimensional: return "NotZeroDimensional";
    case Errc::NotContained: return "NotContained";
    case Errc::NotFiniteLength: return "NotFiniteLength";
    case Errc::EmptyScheme: return "EmptyScheme";
    case Errc::DegenerateSlice: return "DegenerateSlice";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Singular: return "Singular";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotMaximalIsotropic: return "NotMaximalIsotropic";
    case Errc::NoRationalSplitting: return "NoRationalSplitting";
    case Errc::NotIsotropic: return "NotIsotropic";
    case Errc::ZeroLocusNotOriginOnly: return "ZeroLocusNotOriginOnly";
    case Errc::BadWeights: return "BadWeights";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::PerturbationFailed: return "PerturbationFailed";
    case Errc::ConsistencyFailure: return "ConsistencyFailure";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::ComplexNotExact2Periodic: return "ComplexNotExact2Periodic";
    case Errc::NoInvariantIsotropic: return "NoInvariantIsotropic";
    case Errc::NonIntegerRatio: return "NonIntegerRatio";
    case Errc::ZeroBaseWeight: return "ZeroBaseWeight";
    case Errc::WeightConstraintViolated: return "WeightConstraintViolated";
    case Errc::SectionNotInSubspace: return "SectionNotInSubspace";
    case Errc::CloseRoots: return "CloseRoots";
    case Errc::RankAmbiguous: return "RankAmbiguous";
    case Errc::ResidualTooLarge: return "ResidualTooLarge";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::WindingMismatch: return "WindingMismatch";
    case Errc::SchemaError: return "SchemaError";
    case Errc::UnknownRoute: return "UnknownRoute";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace isohopf
