#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hwe {

enum class ErrorKind {
  NotPrime,
  NoBuiltinModulus,
  ReducibleModulus,
  InvalidModulus,
  FieldTooLarge,
  DivisionByZero,
  FieldMismatch,
  NoEmbeddingRegistered,
  RowLengthMismatch,
  ElementOutOfField,
  BudgetExceeded,
  RankOutOfRange,
  DegreeZero,
  DegreeOutOfRange,
  IndexOutOfRange,
  NotHarmonic,
  GroundSetTooLarge,
  IncompleteInput,
  DegreeMismatch,
  MixedBlockSizes,
  StrengthExceedsBlockSize,
  StrengthTooLarge,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NoBuiltinModulus: return "NoBuiltinModulus";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NoEmbeddingRegistered: return "NoEmbeddingRegistered";
    case ErrorKind::RowLengthMismatch: return "RowLengthMismatch";
    case ErrorKind::ElementOutOfField: return "ElementOutOfField";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotHarmonic: return "NotHarmonic";
    case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::IncompleteInput: return "IncompleteInput";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::MixedBlockSizes: return "MixedBlockSizes";
    case ErrorKind::StrengthExceedsBlockSize: return "StrengthExceedsBlockSize";
    case ErrorKind::StrengthTooLarge: return "StrengthTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable kind next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hwe
