#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zariski/cycles.hpp"
#include "zariski/decomposition.hpp"
#include "zariski/lattice.hpp"

namespace zariski {

/// Analytic spread of the filtration I(nD) from intersection data alone.
/// Spread 2 is decided; 0 and 1 are not separable numerically.
enum class SpreadClass { Two, ZeroOrOne };

std::string_view spread_name(SpreadClass spread);

struct HilbertSlope {
  // l_R(I(nD) / m_R I(nD)) = n * alpha + sigma(n), sigma bounded.
  Rational alpha;
  QDivisor g;
  GProvenance g_used = GProvenance::FundamentalCycle;
};

using ExceptionalSet = std::set<std::string>;
using SymbolicForm = std::vector<std::pair<std::string, Rational>>;

struct ClassificationReport {
  ZariskiDecomposition decomposition;
  SpreadClass spread = SpreadClass::ZeroOrOne;
  bool mr_associated_eventually = false;
  ExceptionalSet redundant_exceptional;
  std::optional<SymbolicForm> symbolic_form;
  ExceptionalSet negative_wall;
  ExceptionalSet persistent_fixed_candidates;
  HilbertSlope hilbert;
  std::vector<std::string> caveats;
};

/// Exceptional curves with (delta . E) < 0.
ExceptionalSet negative_wall(const ValidatedConfig& cfg, const ZariskiDecomposition& dec);

SpreadClass spread_class(const ValidatedConfig& cfg, const ZariskiDecomposition& dec);

/// Whether m_R is an associated prime of R / I(n delta) for all large n.
bool mr_associated_eventually(const ValidatedConfig& cfg, const ZariskiDecomposition& dec);

/// Exceptional valuations that can be dropped from the intersection
/// defining I(n delta) for every n: the curves with (delta . E) = 0.
ExceptionalSet redundant_exceptional(const ValidatedConfig& cfg,
                                     const ZariskiDecomposition& dec);

/// When the spread is not two, I(nD) is the intersection of the symbolic
/// powers Q_i^(ceil(n b_i)) of the primes of the strict transforms in d; the
/// result lists those (label, b_i). Empty optional when the spread is two.
std::optional<SymbolicForm> symbolic_form(const ValidatedConfig& cfg, const QDivisor& d,
                                          const ZariskiDecomposition& dec);

/// The only curves that can be fixed components of |-n delta| for
/// infinitely many n.
ExceptionalSet persistent_fixed_candidates(const ValidatedConfig& cfg,
                                           const ZariskiDecomposition& dec);

/// For anti-nef effective d1 <= d2, the filtrations agree for infinitely
/// many n iff the divisors are equal. Throws PreconditionOrder if d1 is not
/// below d2, NotEffective / NotAntiNef on the other preconditions.
bool filtrations_equal(const ValidatedConfig& cfg, const QDivisor& d1, const QDivisor& d2);

/// alpha = -(delta . G). Throws InvalidUserG if g is not a valid G.
HilbertSlope hilbert_slope(const ValidatedConfig& cfg, const ZariskiDecomposition& dec,
                           const QDivisor& g,
                           GProvenance provenance = GProvenance::User);

/// Full pipeline: decomposition, spread, walls, symbolic form, slope.
ClassificationReport classify(const ValidatedConfig& cfg, const QDivisor& d,
                              const GSource& g_source = FromFundamentalCycle{});

// Riemann-Roch on an exceptional curve.

/// chi(O_E(D)) = deg D + 1 - p_a(E).
long curve_chi(long degree, long arithmetic_genus);

/// Sufficient condition deg D > 2 p_a - 2 for h^1(O_E(D)) = 0. A false
/// result means vanishing is not guaranteed.
bool curve_h1_vanishes(long degree, long arithmetic_genus);

struct CurvePoint {
  long coefficient = 0;
  long residue_degree = 1;  // [O_{E,p} / m_p : k]
};

long curve_divisor_degree(std::span<const CurvePoint> points);

}  // namespace zariski
