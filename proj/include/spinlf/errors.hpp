#pragma once

#include <stdexcept>
#include <string>

namespace spinlf {

// Base class for all library errors, so callers can catch them apart from
// std:: failures.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidRank : Error {
  explicit InvalidRank(const std::string& what) : Error(what) {}
};

struct RankMismatch : Error {
  explicit RankMismatch(const std::string& what) : Error(what) {}
};

struct NotARoot : Error {
  explicit NotARoot(const std::string& what) : Error(what) {}
};

struct NotQuasiSplit : Error {
  explicit NotQuasiSplit(const std::string& what) : Error(what) {}
};

struct CaseMismatch : Error {
  explicit CaseMismatch(const std::string& what) : Error(what) {}
};

struct SingularAlternant : Error {
  explicit SingularAlternant(const std::string& what) : Error(what) {}
};

struct NonzeroLastPart : Error {
  explicit NonzeroLastPart(const std::string& what) : Error(what) {}
};

struct OracleBudgetExceeded : Error {
  explicit OracleBudgetExceeded(const std::string& what) : Error(what) {}
};

struct ZeroSimilitude : Error {
  explicit ZeroSimilitude(const std::string& what) : Error(what) {}
};

struct ZeroCharacterValue : Error {
  explicit ZeroCharacterValue(const std::string& what) : Error(what) {}
};

struct MembershipViolation : Error {
  explicit MembershipViolation(const std::string& what) : Error(what) {}
};

struct NormMismatch : Error {
  explicit NormMismatch(const std::string& what) : Error(what) {}
};

struct NonUnitConstantTerm : Error {
  explicit NonUnitConstantTerm(const std::string& what) : Error(what) {}
};

struct NonCancellingQExponent : Error {
  explicit NonCancellingQExponent(const std::string& what) : Error(what) {}
};

// A value that would only be expressible in a quadratic extension of Q was
// requested through a rational-valued interface.
struct IrrationalValue : Error {
  explicit IrrationalValue(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace spinlf
