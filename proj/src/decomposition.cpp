#include "zariski/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "zariski/exact_linalg.hpp"

namespace zariski {

namespace {

using Index = Eigen::Index;

void require_effective(const ValidatedConfig& cfg, const QDivisor& d) {
  cfg.check_labels(d);
  if (!d.is_effective()) {
    throw Error(ErrorKind::NotEffective, "Zariski decomposition needs an effective divisor");
  }
}

// Exceptional coefficients x with x_S = -(M_SS)^{-1} g_S and x = 0 off S.
RationalVector solve_on_support(const RationalMatrix& m, const RationalVector& g,
                                const std::vector<Index>& support) {
  RationalVector x = RationalVector::Zero(m.rows());
  if (support.empty()) return x;
  const RationalVector rhs = -gather(g, support);
  const auto solved = solve_exact<Rational>(principal_submatrix(m, support), rhs);
  // Principal submatrices of a negative definite matrix are nonsingular.
  if (!solved) throw Error(ErrorKind::NoFeasibleSupport, "singular principal submatrix");
  for (std::size_t k = 0; k < support.size(); ++k) x(support[k]) = (*solved)(static_cast<Index>(k));
  return x;
}

ZariskiDecomposition assemble(const ValidatedConfig& cfg, const QDivisor& d,
                              const RationalVector& x) {
  ZariskiDecomposition result;
  result.b = cfg.from_exceptional_coords(x);
  result.delta = d + result.b;
  result.certificate = certify(cfg, d, result.b);
  return result;
}

std::size_t active_set_fuse(Index rank) {
  if (rank >= 60) return std::numeric_limits<std::size_t>::max();
  return 3 * (std::size_t{1} << rank);
}

}  // namespace

ComplementarityCertificate certify(const ValidatedConfig& cfg, const QDivisor& d,
                                   const QDivisor& b) {
  ComplementarityCertificate cert;
  if (!b.is_effective() || !cfg.has_exceptional_support(b)) return cert;
  const RationalVector p = cfg.pairings(d + b);
  cert.antinef_ok = (p.array() <= Rational(0)).all();
  cert.support_orthogonality_ok = true;
  for (const auto& [label, value] : b.terms()) {
    if (value > 0 && p(*cfg.exceptional_index(label)) != 0) {
      cert.support_orthogonality_ok = false;
    }
  }
  return cert;
}

ZariskiDecomposition zariski_decompose(const ValidatedConfig& cfg, const QDivisor& d,
                                       ActiveSetTrace* trace) {
  require_effective(cfg, d);
  const RationalMatrix& m = cfg.matrix();
  const Index r = cfg.rank();
  const RationalVector g = cfg.pairings(d);
  const std::size_t fuse = active_set_fuse(r);

  std::vector<bool> in_support(static_cast<std::size_t>(r), false);
  for (Index j = 0; j < r; ++j) in_support[static_cast<std::size_t>(j)] = g(j) > 0;

  ActiveSetTrace local;
  ActiveSetTrace& t = trace ? *trace : local;
  t = ActiveSetTrace{};
  RationalVector x;
  while (true) {
    if (t.steps >= fuse) {
      t.used_fallback = true;
      return oracle_decompose(cfg, d);
    }
    std::vector<Index> support;
    for (Index j = 0; j < r; ++j) {
      if (in_support[static_cast<std::size_t>(j)]) support.push_back(j);
    }
    x = solve_on_support(m, g, support);
    ++t.steps;

    bool dropped = false;
    for (Index i : support) {
      if (x(i) < 0) {
        in_support[static_cast<std::size_t>(i)] = false;
        dropped = true;
      }
    }
    if (dropped) continue;

    const RationalVector p = g + m * x;
    bool added = false;
    for (Index j = 0; j < r; ++j) {
      if (!in_support[static_cast<std::size_t>(j)] && p(j) > 0) {
        in_support[static_cast<std::size_t>(j)] = true;
        added = true;
      }
    }
    if (!added) break;
  }

  ZariskiDecomposition result = assemble(cfg, d, x);
  if (!result.certificate.holds()) {
    t.used_fallback = true;
    return oracle_decompose(cfg, d);
  }
  return result;
}

QDivisor pointwise_min(const QDivisor& b, const QDivisor& b2) {
  QDivisor result;
  for (const auto& [label, value] : b.terms()) result.set(label, std::min(value, b2.coeff(label)));
  for (const auto& [label, value] : b2.terms()) result.set(label, std::min(value, b.coeff(label)));
  return result;
}

ZariskiDecomposition oracle_decompose(const ValidatedConfig& cfg, const QDivisor& d,
                                      std::size_t rank_cap) {
  require_effective(cfg, d);
  const Index r = cfg.rank();
  if (static_cast<std::size_t>(r) > rank_cap) {
    throw Error(ErrorKind::RankCapExceeded, "rank " + std::to_string(r) +
                                                " exceeds oracle cap " + std::to_string(rank_cap));
  }
  const RationalMatrix& m = cfg.matrix();
  const RationalVector g = cfg.pairings(d);

  std::vector<RationalVector> feasible;
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<Index> support;
    for (Index j = 0; j < r; ++j) {
      if (mask & (std::size_t{1} << j)) support.push_back(j);
    }
    const RationalVector x = solve_on_support(m, g, support);
    if (!(x.array() >= Rational(0)).all()) continue;
    const RationalVector p = g + m * x;
    bool ok = true;
    for (Index j = 0; j < r && ok; ++j) {
      if (!(mask & (std::size_t{1} << j)) && p(j) > 0) ok = false;
    }
    if (!ok) continue;
    if (std::find(feasible.begin(), feasible.end(), x) == feasible.end()) feasible.push_back(x);
  }

  if (feasible.empty()) {
    throw Error(ErrorKind::NoFeasibleSupport, "no support admits a complementary solution");
  }
  if (feasible.size() > 1) {
    throw Error(ErrorKind::OracleDisagreement,
                std::to_string(feasible.size()) + " distinct complementary solutions");
  }
  const RationalVector& best = feasible.front();
  for (const auto& x : feasible) {
    if (x.sum() < best.sum()) {
      throw Error(ErrorKind::OracleDisagreement, "complementary solution is not sum-minimal");
    }
  }
  return assemble(cfg, d, best);
}

}  // namespace zariski
