#pragma once

#include <stdexcept>

namespace braidsig {

// Base class for everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedToken : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct StrandMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvariantViolation : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct ParameterTooSmall : Error { using Error::Error; };
struct PhaseError : Error { using Error::Error; };
struct ChallengeMismatch : Error { using Error::Error; };
struct AmbiguousT : Error { using Error::Error; };
struct NoMatch : Error { using Error::Error; };
struct CommitmentInvalid : Error { using Error::Error; };
struct PartitionInvalid : Error { using Error::Error; };
struct SchemeMismatch : Error { using Error::Error; };

}  // namespace braidsig
