#pragma once

#include <stdexcept>
#include <string>

namespace hlya {

/* Base class for every library error. The CLI maps subclasses onto its
   exit-code contract, so new error types should pick one of the existing
   categories below. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* exit 2: the input document or value is malformed. */
struct ParseError : Error {
  using Error::Error;
};

/* exit 1: a mathematical check failed (axiom, predicate, witness, ...). */
struct MathError : Error {
  using Error::Error;
};

/* exit 3: a construction cannot be carried out on this instance. */
struct ConstructionError : Error {
  using Error::Error;
};

/* exit 4: a bounded search ended without an answer either way. */
struct InconclusiveError : Error {
  using Error::Error;
};

struct DimensionMismatch : ParseError {
  using ParseError::ParseError;
};

struct FieldMismatch : ParseError {
  using ParseError::ParseError;
};

struct SingularMatrix : ConstructionError {
  SingularMatrix() : ConstructionError("Singular") {}
  explicit SingularMatrix(const std::string& what) : ConstructionError(what) {}
};

struct NotAnIdeal : MathError {
  NotAnIdeal() : MathError("subspace is not a hom-ideal") {}
  explicit NotAnIdeal(const std::string& what) : MathError(what) {}
};

struct NoInvariantComplement : ConstructionError {
  NoInvariantComplement() : ConstructionError("no twist-invariant complement exists") {}
  explicit NoInvariantComplement(const std::string& what) : ConstructionError(what) {}
};

struct TwistNotInvertible : ConstructionError {
  TwistNotInvertible() : ConstructionError("induced twist is not invertible") {}
  explicit TwistNotInvertible(const std::string& what) : ConstructionError(what) {}
};

struct ValueOutsideCenter : ConstructionError {
  ValueOutsideCenter() : ConstructionError("value does not lie in the center") {}
  explicit ValueOutsideCenter(const std::string& what) : ConstructionError(what) {}
};

struct ReconstructionFailed : ConstructionError {
  ReconstructionFailed() : ConstructionError("reconstruction map is not an isomorphism") {}
  explicit ReconstructionFailed(const std::string& what) : ConstructionError(what) {}
};

struct WitnessVerificationFailed : MathError {
  WitnessVerificationFailed() : MathError("witness failed verification") {}
  explicit WitnessVerificationFailed(const std::string& what) : MathError(what) {}
};

struct NotAFamily : MathError {
  NotAFamily() : MathError("algebras are not pairwise isoclinic") {}
  explicit NotAFamily(const std::string& what) : MathError(what) {}
};

struct StemCheckFailed : MathError {
  StemCheckFailed() : MathError("decomposition parts failed the stem/abelian checks") {}
  explicit StemCheckFailed(const std::string& what) : MathError(what) {}
};

struct BudgetExhausted : InconclusiveError {
  BudgetExhausted() : InconclusiveError("search budget exhausted") {}
  explicit BudgetExhausted(const std::string& what) : InconclusiveError(what) {}
};

}  // namespace hlya
