#pragma once

#include <cstddef>

#include "zariski/lattice.hpp"

namespace zariski {

struct ComplementarityCertificate {
  bool antinef_ok = false;
  // (delta . E_j) = 0 wherever b[E_j] > 0.
  bool support_orthogonality_ok = false;

  bool holds() const { return antinef_ok && support_orthogonality_ok; }
};

/// delta = d + b with b effective and exceptional, delta anti-nef, and
/// delta orthogonal to every component of b.
struct ZariskiDecomposition {
  QDivisor delta;
  QDivisor b;
  ComplementarityCertificate certificate;
};

struct ActiveSetTrace {
  std::size_t steps = 0;
  bool used_fallback = false;
};

/// Checks the two complementarity conditions for delta = d + b. Also
/// returns false on either flag when b is not effective or not exceptional.
ComplementarityCertificate certify(const ValidatedConfig& cfg, const QDivisor& d,
                                   const QDivisor& b);

/// Active-set solve of the Zariski decomposition of an effective d.
///
/// Starting from the support of the positive pairings, alternately drops
/// indices whose solved coefficient is negative and adds every index whose
/// pairing with the current candidate is positive, each step one exact
/// linear solve on the current support. After 3 * 2^r steps the result is
/// taken from oracle_decompose() instead. The returned certificate always
/// holds; uniqueness makes it the decomposition.
ZariskiDecomposition zariski_decompose(const ValidatedConfig& cfg, const QDivisor& d,
                                       ActiveSetTrace* trace = nullptr);

/// Componentwise minimum; absent coefficients count as zero.
QDivisor pointwise_min(const QDivisor& b, const QDivisor& b2);

inline constexpr std::size_t kDefaultOracleRankCap = 12;

/// Brute force over all 2^r supports. Throws RankCapExceeded above the cap,
/// NoFeasibleSupport if no complementary solution exists and
/// OracleDisagreement if two distinct ones do (both impossible on validated
/// input).
ZariskiDecomposition oracle_decompose(const ValidatedConfig& cfg, const QDivisor& d,
                                      std::size_t rank_cap = kDefaultOracleRankCap);

}  // namespace zariski
