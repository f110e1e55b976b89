#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clubcomb {

enum class Club;

enum class ErrorKind {
  ArityMismatch,
  CodomainMismatch,
  IndexOutOfRange,
  NotInClub,
  SyntaxError,
  UndeclaredVariable,
  DuplicateContextVariable,
  EmptyTerm,
  ClubViolation,
  ArityZero,
  FuelExhausted,
  InvariantFailure,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::CodomainMismatch: return "CodomainMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotInClub: return "NotInClub";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorKind::DuplicateContextVariable: return "DuplicateContextVariable";
    case ErrorKind::EmptyTerm: return "EmptyTerm";
    case ErrorKind::ClubViolation: return "ClubViolation";
    case ErrorKind::ArityZero: return "ArityZero";
    case ErrorKind::FuelExhausted: return "FuelExhausted";
    case ErrorKind::InvariantFailure: return "InvariantFailure";
  }
  return "Unknown";
}

// Every failure in the library is reported through this type. NotInClub and
// ClubViolation carry the least club that would have accepted the input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<Club> minimal = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        minimal_(minimal) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<Club> minimal_club() const noexcept { return minimal_; }

 private:
  ErrorKind kind_;
  std::optional<Club> minimal_;
};

}  // namespace clubcomb
