#pragma once

#include <stdexcept>
#include <string>

namespace coxcent {

// Every failure mode the library reports. A code identifies the condition;
// the message carries the offending input.
enum class ErrorCode {
  BadFormat,
  DuplicateEdge,
  SelfEdge,
  BadLabel,
  EmptyDiagram,
  UnknownName,
  BadRank,
  UnknownVertex,
  UnknownLetter,
  UnsupportedCycles,
  NotOddPath,
  NotEvenJoin,
  NotSingleEdgeTree,
  ConflictingCertificates,
  NotFinite,
  OrderExceeded,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadFormat: return "BadFormat";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfEdge: return "SelfEdge";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::EmptyDiagram: return "EmptyDiagram";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::UnsupportedCycles: return "UnsupportedCycles";
    case ErrorCode::NotOddPath: return "NotOddPath";
    case ErrorCode::NotEvenJoin: return "NotEvenJoin";
    case ErrorCode::NotSingleEdgeTree: return "NotSingleEdgeTree";
    case ErrorCode::ConflictingCertificates: return "ConflictingCertificates";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace coxcent
