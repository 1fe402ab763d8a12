#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace birch {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BIRCH_DECLARE_ERROR(Name)                 \
  class Name : public Error {                     \
   public:                                        \
    explicit Name(const std::string& what)        \
        : Error(std::string(#Name ": ") + what) {} \
  };

BIRCH_DECLARE_ERROR(InvalidInput)
BIRCH_DECLARE_ERROR(DegenerateSimplex)
BIRCH_DECLARE_ERROR(SingularGenerators)
BIRCH_DECLARE_ERROR(NotGeneralPosition)
BIRCH_DECLARE_ERROR(SizeMismatch)
BIRCH_DECLARE_ERROR(UnclassifiablePartition)
BIRCH_DECLARE_ERROR(NotPrimePower)
BIRCH_DECLARE_ERROR(ExhaustedRetries)

// A guaranteed counting property failed. Either the implementation is wrong
// or a degenerate input slipped past validation.
BIRCH_DECLARE_ERROR(InconsistencyDetected)

#undef BIRCH_DECLARE_ERROR

/// Configuration text that could not be parsed. Line and field are 1-based;
/// zero means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t field = 0)
      : Error(format(what, line, field)), line_(line), field_(field) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t field() const noexcept { return field_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t field) {
    std::string out = "ParseError";
    if (line > 0) out += " at line " + std::to_string(line);
    if (field > 0) out += ", field " + std::to_string(field);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t field_;
};

}  // namespace birch
