#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ssg {

enum class ErrorKind {
  InvalidTable,
  NotAssociative,
  OutOfRange,
  NotSubsemigroup,
  ZNotCentralInN,
  BinormalityFails,
  TrinormalityFails,
  NotStructured,
  OrderTooLarge,
  NotComposable,
  NotCoset,
  NotAtlas,
  NotInUpClosure,
  InvalidGroupoid,
  InvalidCocycle,
  NotRepresentation,
  NoZero,
  NotSemilattice,
  NotInverse,
  UnknownFixture,
  TooManySections,
  TooManyRelations,
  TooManyOpens,
  InvalidInput,
};

const char* to_string(ErrorKind k);

// Guard violations map to a distinct CLI exit status.
inline bool is_guard(ErrorKind k) {
  return k == ErrorKind::OrderTooLarge || k == ErrorKind::TooManySections ||
         k == ErrorKind::TooManyRelations || k == ErrorKind::TooManyOpens;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

}  // namespace ssg
