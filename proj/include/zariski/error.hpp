#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zariski {

enum class ErrorKind {
  // Input could not be read or parsed.
  Io,
  Parse,
  // Configuration validation.
  DuplicateLabel,
  UnknownId,
  InvalidConfig,
  NonNegativeSelfIntersection,
  DisconnectedGraph,
  NotNegativeDefinite,
  // Operation preconditions.
  PairAgainstStrictTransform,
  NotEffective,
  NotAntiNef,
  PreconditionOrder,
  InvalidUserG,
  RankCapExceeded,
  // Internal inconsistencies; these indicate a bug.
  NoFeasibleSupport,
  FuseExceeded,
  OracleDisagreement,
};

std::string_view kind_name(ErrorKind kind);

/// The single exception type thrown by the library. what() is
/// "<KindName>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace zariski
