#include "zariski/error.hpp"

namespace zariski {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return "Io";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::NonNegativeSelfIntersection: return "NonNegativeSelfIntersection";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorKind::PairAgainstStrictTransform: return "PairAgainstStrictTransform";
    case ErrorKind::NotEffective: return "NotEffective";
    case ErrorKind::NotAntiNef: return "NotAntiNef";
    case ErrorKind::PreconditionOrder: return "PreconditionOrder";
    case ErrorKind::InvalidUserG: return "InvalidUserG";
    case ErrorKind::RankCapExceeded: return "RankCapExceeded";
    case ErrorKind::NoFeasibleSupport: return "NoFeasibleSupport";
    case ErrorKind::FuseExceeded: return "FuseExceeded";
    case ErrorKind::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace zariski
