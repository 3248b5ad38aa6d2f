#pragma once

#include <cstddef>
#include <variant>

#include "zariski/lattice.hpp"

namespace zariski {

struct FundamentalCycle {
  QDivisor z;
  std::size_t laufer_steps = 0;
};

enum class ViolatorRule { SmallestIndex, LargestIndex };

inline constexpr std::size_t kLauferFuse = 1'000'000;

/// Minimal nonzero effective integral exceptional cycle with (Z . E_j) <= 0.
/// Starts from the reduced exceptional fiber and adds one violating curve
/// per step. Throws FuseExceeded if the fuse burns (never on a validated
/// configuration).
FundamentalCycle fundamental_cycle(const ValidatedConfig& cfg,
                                   ViolatorRule rule = ViolatorRule::SmallestIndex,
                                   std::size_t fuse = kLauferFuse);

struct FromFundamentalCycle {};
struct UserSupplied {
  QDivisor g;
};
using GSource = std::variant<FromFundamentalCycle, UserSupplied>;

enum class GProvenance { FundamentalCycle, User };

struct ResolvedG {
  QDivisor g;
  GProvenance provenance = GProvenance::FundamentalCycle;
};

/// Throws InvalidUserG unless g is nonzero, effective, integral, exceptional
/// and anti-nef.
void validate_g(const ValidatedConfig& cfg, const QDivisor& g);

ResolvedG resolve_g(const ValidatedConfig& cfg, const GSource& source);

}  // namespace zariski
