#include "zariski/lattice.hpp"

#include <queue>
#include <set>
#include <utility>

#include "zariski/exact_linalg.hpp"

namespace zariski {

QDivisor::QDivisor(std::initializer_list<std::pair<const std::string, Rational>> terms) {
  for (const auto& [label, value] : terms) add(label, value);
}

Rational QDivisor::coeff(const std::string& label) const {
  const auto it = terms_.find(label);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QDivisor::set(const std::string& label, const Rational& value) {
  if (value == 0) {
    terms_.erase(label);
  } else {
    terms_[label] = value;
  }
}

void QDivisor::add(const std::string& label, const Rational& value) {
  set(label, coeff(label) + value);
}

bool QDivisor::is_effective() const {
  for (const auto& [label, value] : terms_) {
    if (value < 0) return false;
  }
  return true;
}

bool QDivisor::is_integral() const {
  for (const auto& [label, value] : terms_) {
    if (!zariski::is_integral(value)) return false;
  }
  return true;
}

QDivisor& QDivisor::operator+=(const QDivisor& other) {
  for (const auto& [label, value] : other.terms_) add(label, value);
  return *this;
}

QDivisor& QDivisor::operator-=(const QDivisor& other) {
  for (const auto& [label, value] : other.terms_) add(label, -value);
  return *this;
}

QDivisor& QDivisor::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [label, value] : terms_) value *= scale;
  return *this;
}

bool leq(const QDivisor& d1, const QDivisor& d2) {
  return (d2 - d1).is_effective();
}

const std::string& ValidatedConfig::exceptional_label(Eigen::Index i) const {
  return config_.exceptional.at(static_cast<std::size_t>(i)).label;
}

std::optional<Eigen::Index> ValidatedConfig::exceptional_index(const std::string& label) const {
  const auto it = exceptional_index_.find(label);
  if (it == exceptional_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<PrimeKind> ValidatedConfig::kind_of(const std::string& label) const {
  if (exceptional_index_.contains(label)) return PrimeKind::Exceptional;
  if (strict_index_.contains(label)) return PrimeKind::StrictTransform;
  return std::nullopt;
}

void ValidatedConfig::check_labels(const QDivisor& d) const {
  for (const auto& [label, value] : d.terms()) {
    if (!kind_of(label)) {
      throw Error(ErrorKind::UnknownId, "divisor mentions unknown prime divisor \"" + label + "\"");
    }
  }
}

bool ValidatedConfig::has_exceptional_support(const QDivisor& d) const {
  for (const auto& [label, value] : d.terms()) {
    if (!exceptional_index_.contains(label)) return false;
  }
  return true;
}

RationalVector ValidatedConfig::exceptional_coords(const QDivisor& d) const {
  RationalVector x = RationalVector::Zero(rank());
  for (const auto& [label, index] : exceptional_index_) x(index) = d.coeff(label);
  return x;
}

QDivisor ValidatedConfig::from_exceptional_coords(const RationalVector& x) const {
  QDivisor d;
  for (Eigen::Index i = 0; i < x.size(); ++i) d.set(exceptional_label(i), x(i));
  return d;
}

RationalVector ValidatedConfig::pairings(const QDivisor& d) const {
  check_labels(d);
  RationalVector result = form_.matrix * exceptional_coords(d);
  for (const auto& [label, index] : strict_index_) {
    const Rational c = d.coeff(label);
    if (c != 0) result += c * strict_meets_.row(index).transpose();
  }
  return result;
}

ValidatedConfig validate_config(const ResolutionConfig& cfg) {
  ValidatedConfig result;
  result.config_ = cfg;
  const auto r = static_cast<Eigen::Index>(cfg.exceptional.size());
  if (r == 0) throw Error(ErrorKind::InvalidConfig, "no exceptional curves");

  std::set<std::string> seen;
  auto claim = [&seen](const std::string& label) {
    if (label.empty()) throw Error(ErrorKind::InvalidConfig, "empty label");
    if (!seen.insert(label).second) throw Error(ErrorKind::DuplicateLabel, label);
  };
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto& curve = cfg.exceptional[static_cast<std::size_t>(i)];
    claim(curve.label);
    if (curve.genus < 0) {
      throw Error(ErrorKind::InvalidConfig, "negative genus on " + curve.label);
    }
    result.exceptional_index_[curve.label] = i;
  }
  for (std::size_t s = 0; s < cfg.strict_transforms.size(); ++s) {
    claim(cfg.strict_transforms[s].label);
    result.strict_index_[cfg.strict_transforms[s].label] = static_cast<Eigen::Index>(s);
  }

  auto exceptional_or_throw = [&result](const std::string& label, const std::string& where) {
    const auto index = result.exceptional_index(label);
    if (!index) {
      throw Error(ErrorKind::UnknownId,
                  "\"" + label + "\" in " + where + " is not an exceptional curve");
    }
    return *index;
  };

  RationalMatrix m = RationalMatrix::Zero(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    m(i, i) = Rational(cfg.exceptional[static_cast<std::size_t>(i)].self_intersection);
  }
  std::set<std::pair<Eigen::Index, Eigen::Index>> edge_seen;
  for (const auto& edge : cfg.edges) {
    const std::string where = "edge [" + edge.a + ", " + edge.b + "]";
    const Eigen::Index i = exceptional_or_throw(edge.a, where);
    const Eigen::Index j = exceptional_or_throw(edge.b, where);
    if (i == j) throw Error(ErrorKind::InvalidConfig, where + " is a self-loop");
    if (edge.multiplicity < 0) {
      throw Error(ErrorKind::InvalidConfig, where + " has negative multiplicity");
    }
    if (!edge_seen.insert(std::minmax(i, j)).second) {
      throw Error(ErrorKind::InvalidConfig, where + " is listed twice");
    }
    m(i, j) = m(j, i) = Rational(edge.multiplicity);
  }

  result.strict_meets_ =
      RationalMatrix::Zero(static_cast<Eigen::Index>(cfg.strict_transforms.size()), r);
  for (std::size_t s = 0; s < cfg.strict_transforms.size(); ++s) {
    const auto& strict = cfg.strict_transforms[s];
    for (const auto& [label, number] : strict.meets) {
      const Eigen::Index j = exceptional_or_throw(label, "meets of " + strict.label);
      if (number < 0) {
        throw Error(ErrorKind::InvalidConfig,
                    "negative intersection of " + strict.label + " with " + label);
      }
      result.strict_meets_(static_cast<Eigen::Index>(s), j) = Rational(number);
    }
    // A strict transform passes through the singular point, so it meets the fiber.
    if (result.strict_meets_.row(static_cast<Eigen::Index>(s)).isZero()) {
      throw Error(ErrorKind::InvalidConfig, strict.label + " meets no exceptional curve");
    }
  }

  for (const auto& curve : cfg.exceptional) {
    if (curve.self_intersection >= 0) {
      throw Error(ErrorKind::NonNegativeSelfIntersection, curve.label);
    }
  }

  std::vector<bool> reached(static_cast<std::size_t>(r), false);
  std::queue<Eigen::Index> frontier;
  frontier.push(0);
  reached[0] = true;
  while (!frontier.empty()) {
    const Eigen::Index i = frontier.front();
    frontier.pop();
    for (Eigen::Index j = 0; j < r; ++j) {
      if (j != i && m(i, j) > 0 && !reached[static_cast<std::size_t>(j)]) {
        reached[static_cast<std::size_t>(j)] = true;
        frontier.push(j);
      }
    }
  }
  for (Eigen::Index j = 0; j < r; ++j) {
    if (!reached[static_cast<std::size_t>(j)]) {
      throw Error(ErrorKind::DisconnectedGraph,
                  result.exceptional_label(j) + " is not connected to " +
                      result.exceptional_label(0));
    }
  }

  result.form_.matrix = m;
  result.form_.minors = leading_principal_minors<Rational>(m);
  for (std::size_t k = 0; k < result.form_.minors.size(); ++k) {
    const int s = sign(result.form_.minors[k]);
    const int expected = k % 2 == 0 ? -1 : 1;
    if (s != expected) {
      throw Error(ErrorKind::NotNegativeDefinite,
                  "leading minor of order " + std::to_string(k + 1) + " is " +
                      to_string(result.form_.minors[k]));
    }
    result.form_.minor_signs.push_back(s);
  }
  return result;
}

Rational pair(const ValidatedConfig& cfg, const QDivisor& d, const std::string& j) {
  const auto index = cfg.exceptional_index(j);
  if (!index) {
    const auto kind = cfg.kind_of(j);
    if (kind == PrimeKind::StrictTransform) {
      throw Error(ErrorKind::PairAgainstStrictTransform, j);
    }
    throw Error(ErrorKind::UnknownId, j);
  }
  return cfg.pairings(d)(*index);
}

bool is_anti_nef(const ValidatedConfig& cfg, const QDivisor& d) {
  const RationalVector p = cfg.pairings(d);
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    if (p(j) > 0) return false;
  }
  return true;
}

bool is_anti_ample(const ValidatedConfig& cfg, const QDivisor& d) {
  const RationalVector p = cfg.pairings(d);
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    if (p(j) >= 0) return false;
  }
  return true;
}

}  // namespace zariski
