#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stardiff {

enum class ErrorKind {
  EmptyComplex,
  GhostVertex,
  BadIndex,
  NotAFace,
  AmbientMismatch,
  FieldMismatch,
  SupportNotAFace,
  NotInDR,
  ZeroElement,
  TooLarge,
  BadQ,
  QTooSmall,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyComplex: return "EmptyComplex";
    case ErrorKind::GhostVertex: return "GhostVertex";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::SupportNotAFace: return "SupportNotAFace";
    case ErrorKind::NotInDR: return "NotInDR";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadQ: return "BadQ";
    case ErrorKind::QTooSmall: return "QTooSmall";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Validation failure raised by any stardiff operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stardiff
