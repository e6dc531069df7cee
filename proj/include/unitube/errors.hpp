#ifndef UNITUBE_ERRORS_HPP
#define UNITUBE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unitube {

// Failure conditions carried by Error.  The CLI maps every Error to exit
// code 2 (validation); check subcommands use exit 3 for detected mismatches.
enum class ErrorKind {
  OutOfRange,
  NotALoop,
  InvalidLabel,
  SiteMismatch,
  ProjectiveObject,
  InjectiveObject,
  CompositionMismatch,
  EmptyKeepSet,
  NotInSubcategory,
  InfiniteReflection,
  InfiniteLength,
  RankMismatch,
  SupportOutOfWindow,
  NotOrderPreserving,
  PrecisionMismatch,
  NoPath,
  BadInput,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotALoop: return "NotALoop";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::SiteMismatch: return "SiteMismatch";
    case ErrorKind::ProjectiveObject: return "ProjectiveObject";
    case ErrorKind::InjectiveObject: return "InjectiveObject";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorKind::NotInSubcategory: return "NotInSubcategory";
    case ErrorKind::InfiniteReflection: return "InfiniteReflection";
    case ErrorKind::InfiniteLength: return "InfiniteLength";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::SupportOutOfWindow: return "SupportOutOfWindow";
    case ErrorKind::NotOrderPreserving: return "NotOrderPreserving";
    case ErrorKind::PrecisionMismatch: return "PrecisionMismatch";
    case ErrorKind::NoPath: return "NoPath";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

}  // namespace unitube

#endif
