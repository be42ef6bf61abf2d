#ifndef SPINFACTOR_ERROR_HPP
#define SPINFACTOR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spinfactor {

enum class ErrorKind {
  NotGCM,
  NotSymmetrizable,
  NotFiniteType,
  IndexOutOfRange,
  NotDominant,
  NotIntegral,
  RootSystemMismatch,
  NotACharacter,
  NotSelfDual,
  ZeroPairing,
  NonIntegralLambda,
  NonIntegralNu,
  TooLarge,
  NonIntegralImage,
  BadRank,
  UnsupportedKind,
  BadPartition,
  ZeroPolynomial,
  DecompositionMismatch,
  NotDominantAffine,
  LevelNotPositive,
  RankGate,
  UnsupportedCase,
  SimplyLaced,
  Internal,
  Usage,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace spinfactor

#endif
