#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zariski/error.hpp"
#include "zariski/rational.hpp"

namespace zariski {

enum class PrimeKind { Exceptional, StrictTransform };

struct PrimeDivisorId {
  std::string label;
  PrimeKind kind = PrimeKind::Exceptional;

  friend bool operator==(const PrimeDivisorId&, const PrimeDivisorId&) = default;
};

struct ExceptionalCurve {
  std::string label;
  long self_intersection = -1;
  long genus = 0;  // arithmetic genus p_a

  friend bool operator==(const ExceptionalCurve&, const ExceptionalCurve&) = default;
};

/// (E_a . E_b) for a != b. Absent pairs intersect in zero.
struct Edge {
  std::string a;
  std::string b;
  long multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct StrictTransform {
  std::string label;
  std::map<std::string, long> meets;  // exceptional label -> (F . E)

  friend bool operator==(const StrictTransform&, const StrictTransform&) = default;
};

/// The weighted dual graph of a resolution, as read from input. Nothing is
/// checked until validate_config().
struct ResolutionConfig {
  std::vector<ExceptionalCurve> exceptional;
  std::vector<Edge> edges;
  std::vector<StrictTransform> strict_transforms;

  friend bool operator==(const ResolutionConfig&, const ResolutionConfig&) = default;
};

/// A finitely supported Q-linear combination of prime divisors, keyed by
/// label. Zero coefficients are never stored.
class QDivisor {
 public:
  using Map = std::map<std::string, Rational>;

  QDivisor() = default;
  QDivisor(std::initializer_list<std::pair<const std::string, Rational>> terms);

  Rational coeff(const std::string& label) const;
  void set(const std::string& label, const Rational& value);
  void add(const std::string& label, const Rational& value);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const;
  bool is_integral() const;

  QDivisor& operator+=(const QDivisor& other);
  QDivisor& operator-=(const QDivisor& other);
  QDivisor& operator*=(const Rational& scale);

  friend QDivisor operator+(QDivisor lhs, const QDivisor& rhs) { return lhs += rhs; }
  friend QDivisor operator-(QDivisor lhs, const QDivisor& rhs) { return lhs -= rhs; }
  friend QDivisor operator*(const Rational& scale, QDivisor d) { return d *= scale; }
  friend bool operator==(const QDivisor&, const QDivisor&) = default;

 private:
  Map terms_;
};

/// Componentwise d1 <= d2 (absent coefficients are zero).
bool leq(const QDivisor& d1, const QDivisor& d2);

/// Intersection matrix of the exceptional curves together with its
/// negative-definiteness certificate: the leading minor of order k has
/// sign (-1)^k.
struct IntersectionForm {
  RationalMatrix matrix;
  std::vector<Rational> minors;
  std::vector<int> minor_signs;
};

/// A configuration that passed every check in validate_config(). It can only
/// be obtained from there, so holding one is the proof of validity.
class ValidatedConfig {
 public:
  const ResolutionConfig& config() const { return config_; }
  const IntersectionForm& form() const { return form_; }
  const RationalMatrix& matrix() const { return form_.matrix; }
  Eigen::Index rank() const { return form_.matrix.rows(); }

  const std::string& exceptional_label(Eigen::Index i) const;
  std::optional<Eigen::Index> exceptional_index(const std::string& label) const;
  std::optional<PrimeKind> kind_of(const std::string& label) const;

  /// Throws UnknownId if d mentions a label absent from the configuration.
  void check_labels(const QDivisor& d) const;
  bool has_exceptional_support(const QDivisor& d) const;

  /// Coefficients of d on E_1..E_r.
  RationalVector exceptional_coords(const QDivisor& d) const;
  QDivisor from_exceptional_coords(const RationalVector& x) const;

  /// The vector ((d . E_j))_j.
  RationalVector pairings(const QDivisor& d) const;

 private:
  friend ValidatedConfig validate_config(const ResolutionConfig& cfg);
  ValidatedConfig() = default;

  ResolutionConfig config_;
  IntersectionForm form_;
  std::map<std::string, Eigen::Index> exceptional_index_;
  std::map<std::string, Eigen::Index> strict_index_;
  RationalMatrix strict_meets_;  // s x r
};

/// Checks labels, self-intersections, connectedness of the dual graph, and
/// negative definiteness, in that order. Throws Error with one of
/// DuplicateLabel, UnknownId, InvalidConfig, NonNegativeSelfIntersection,
/// DisconnectedGraph, NotNegativeDefinite.
ValidatedConfig validate_config(const ResolutionConfig& cfg);

/// (d . E_j). Only exceptional j is allowed.
Rational pair(const ValidatedConfig& cfg, const QDivisor& d, const std::string& j);

bool is_anti_nef(const ValidatedConfig& cfg, const QDivisor& d);
bool is_anti_ample(const ValidatedConfig& cfg, const QDivisor& d);

}  // namespace zariski
