#include "zariski/cycles.hpp"

#include <type_traits>

namespace zariski {

FundamentalCycle fundamental_cycle(const ValidatedConfig& cfg, ViolatorRule rule,
                                   std::size_t fuse) {
  const RationalMatrix& m = cfg.matrix();
  const Eigen::Index r = cfg.rank();
  RationalVector z = RationalVector::Constant(r, Rational(1));
  RationalVector p = m * z;
  FundamentalCycle result;
  while (true) {
    Eigen::Index violator = -1;
    for (Eigen::Index k = 0; k < r; ++k) {
      const Eigen::Index j = rule == ViolatorRule::SmallestIndex ? k : r - 1 - k;
      if (p(j) > 0) {
        violator = j;
        break;
      }
    }
    if (violator < 0) break;
    if (result.laufer_steps >= fuse) {
      throw Error(ErrorKind::FuseExceeded,
                  "Laufer iteration exceeded " + std::to_string(fuse) + " steps");
    }
    z(violator) += 1;
    p += m.col(violator);
    ++result.laufer_steps;
  }
  result.z = cfg.from_exceptional_coords(z);
  return result;
}

void validate_g(const ValidatedConfig& cfg, const QDivisor& g) {
  auto reject = [](const std::string& why) { throw Error(ErrorKind::InvalidUserG, why); };
  if (g.is_zero()) reject("G is zero");
  for (const auto& [label, value] : g.terms()) {
    if (!cfg.exceptional_index(label)) reject("G has non-exceptional component " + label);
  }
  if (!g.is_effective()) reject("G is not effective");
  if (!g.is_integral()) reject("G is not integral");
  if (!is_anti_nef(cfg, g)) reject("G is not anti-nef");
}

ResolvedG resolve_g(const ValidatedConfig& cfg, const GSource& source) {
  return std::visit(
      [&cfg](const auto& s) -> ResolvedG {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, UserSupplied>) {
          validate_g(cfg, s.g);
          return {s.g, GProvenance::User};
        } else {
          return {fundamental_cycle(cfg).z, GProvenance::FundamentalCycle};
        }
      },
      source);
}

}  // namespace zariski
