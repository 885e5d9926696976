#pragma once

#include <stdexcept>
#include <string>

namespace monhecke {

// Error kinds surfaced by the library. The CLI maps these to exit codes:
// input/usage errors -> 2, verification failures -> 3, internal breaches -> 4.
enum class Err {
  ParseError,
  DimensionMismatch,
  PairingMismatch,
  SingularAdjoint,
  DegenerateLattice,
  InfiniteGroup,
  InfiniteOrbit,
  OrbitTruncated,
  NonFiniteParabolic,
  GroupMismatch,
  NotAReflection,
  NotInBlock,
  NotPalindromic,
  CompositionMismatch,
  SpaceMismatch,
  UnknownSuite,
  CorruptCache,
  Internal,
};

class MhError : public std::runtime_error {
 public:
  MhError(Err kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) {
  throw MhError(kind, what);
}

inline void require(bool cond, Err kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

const char* err_name(Err kind);

}  // namespace monhecke
