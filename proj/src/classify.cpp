#include "zariski/classify.hpp"

namespace zariski {

namespace {

ExceptionalSet wall(const ValidatedConfig& cfg, const ZariskiDecomposition& dec, int which) {
  const RationalVector p = cfg.pairings(dec.delta);
  ExceptionalSet result;
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    if (sign(p(j)) == which) result.insert(cfg.exceptional_label(j));
  }
  return result;
}

constexpr const char* kSpreadCaveat =
    "analytic spread is 0 or 1: intersection data cannot separate the two cases, which depend "
    "on whether a degree-zero line bundle class on the exceptional curves is torsion";
constexpr const char* kFundamentalCycleCaveat =
    "G is taken to be the fundamental cycle, which is the divisor of m_R O_X for rational "
    "singularities; for other singularities the true G may be larger and alpha may be "
    "underestimated";
constexpr const char* kSigmaCaveat =
    "the deviation sigma(n) in length(I(nD)/m_R I(nD)) = n*alpha + sigma(n) is bounded but not "
    "computed";

}  // namespace

std::string_view spread_name(SpreadClass spread) {
  return spread == SpreadClass::Two ? "Two" : "ZeroOrOne";
}

ExceptionalSet negative_wall(const ValidatedConfig& cfg, const ZariskiDecomposition& dec) {
  return wall(cfg, dec, -1);
}

SpreadClass spread_class(const ValidatedConfig& cfg, const ZariskiDecomposition& dec) {
  return negative_wall(cfg, dec).empty() ? SpreadClass::ZeroOrOne : SpreadClass::Two;
}

bool mr_associated_eventually(const ValidatedConfig& cfg, const ZariskiDecomposition& dec) {
  return !negative_wall(cfg, dec).empty();
}

ExceptionalSet redundant_exceptional(const ValidatedConfig& cfg,
                                     const ZariskiDecomposition& dec) {
  return wall(cfg, dec, 0);
}

std::optional<SymbolicForm> symbolic_form(const ValidatedConfig& cfg, const QDivisor& d,
                                          const ZariskiDecomposition& dec) {
  if (spread_class(cfg, dec) == SpreadClass::Two) return std::nullopt;
  SymbolicForm form;
  for (const auto& [label, value] : d.terms()) {
    if (cfg.kind_of(label) == PrimeKind::StrictTransform && value > 0) {
      form.emplace_back(label, value);
    }
  }
  return form;
}

ExceptionalSet persistent_fixed_candidates(const ValidatedConfig& cfg,
                                           const ZariskiDecomposition& dec) {
  return wall(cfg, dec, 0);
}

bool filtrations_equal(const ValidatedConfig& cfg, const QDivisor& d1, const QDivisor& d2) {
  cfg.check_labels(d1);
  cfg.check_labels(d2);
  if (!d1.is_effective() || !d2.is_effective()) {
    throw Error(ErrorKind::NotEffective, "filtration comparison needs effective divisors");
  }
  if (!is_anti_nef(cfg, d1) || !is_anti_nef(cfg, d2)) {
    throw Error(ErrorKind::NotAntiNef, "filtration comparison needs anti-nef divisors");
  }
  if (!leq(d1, d2)) throw Error(ErrorKind::PreconditionOrder, "d1 is not <= d2");
  return d1 == d2;
}

HilbertSlope hilbert_slope(const ValidatedConfig& cfg, const ZariskiDecomposition& dec,
                           const QDivisor& g, GProvenance provenance) {
  validate_g(cfg, g);
  const RationalVector p = cfg.pairings(dec.delta);
  HilbertSlope slope;
  slope.alpha = -cfg.exceptional_coords(g).dot(p);
  slope.g = g;
  slope.g_used = provenance;
  return slope;
}

ClassificationReport classify(const ValidatedConfig& cfg, const QDivisor& d,
                              const GSource& g_source) {
  ClassificationReport report;
  const ResolvedG g = resolve_g(cfg, g_source);
  report.decomposition = zariski_decompose(cfg, d);
  const auto& dec = report.decomposition;
  report.spread = spread_class(cfg, dec);
  report.mr_associated_eventually = mr_associated_eventually(cfg, dec);
  report.redundant_exceptional = redundant_exceptional(cfg, dec);
  report.symbolic_form = symbolic_form(cfg, d, dec);
  report.negative_wall = negative_wall(cfg, dec);
  report.persistent_fixed_candidates = persistent_fixed_candidates(cfg, dec);
  report.hilbert = hilbert_slope(cfg, dec, g.g, g.provenance);
  if (report.spread == SpreadClass::ZeroOrOne) report.caveats.emplace_back(kSpreadCaveat);
  if (g.provenance == GProvenance::FundamentalCycle) {
    report.caveats.emplace_back(kFundamentalCycleCaveat);
  }
  report.caveats.emplace_back(kSigmaCaveat);
  return report;
}

long curve_chi(long degree, long arithmetic_genus) { return degree + 1 - arithmetic_genus; }

bool curve_h1_vanishes(long degree, long arithmetic_genus) {
  return degree > 2 * arithmetic_genus - 2;
}

long curve_divisor_degree(std::span<const CurvePoint> points) {
  long total = 0;
  for (const auto& point : points) total += point.coefficient * point.residue_degree;
  return total;
}

}  // namespace zariski
