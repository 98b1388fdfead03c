#pragma once

#include <stdexcept>
#include <string>

namespace hin {

/// Base class for all library errors. The CLI maps these to exit code 2
/// and a machine-readable error record on stderr.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define HIN_DEFINE_ERROR(NAME)                                  \
  class NAME : public Error {                                   \
   public:                                                      \
    explicit NAME(const std::string& detail) : Error(#NAME, detail) {} \
  }

HIN_DEFINE_ERROR(ParseError);
HIN_DEFINE_ERROR(DuplicateToken);
HIN_DEFINE_ERROR(DegenerateDocument);
HIN_DEFINE_ERROR(InfeasibleMass);
HIN_DEFINE_ERROR(WidthMismatch);
HIN_DEFINE_ERROR(IndexOutOfRange);
HIN_DEFINE_ERROR(SizeMismatch);
HIN_DEFINE_ERROR(DegenerateZero);
HIN_DEFINE_ERROR(EmptyTestSet);
HIN_DEFINE_ERROR(TypingViolation);
HIN_DEFINE_ERROR(OrphanEndpoint);
HIN_DEFINE_ERROR(MultiParentItem);
HIN_DEFINE_ERROR(SchemaVersionMismatch);
HIN_DEFINE_ERROR(MissingPredecessor);
HIN_DEFINE_ERROR(ConfigViolation);

#undef HIN_DEFINE_ERROR

}  // namespace hin
