#pragma once

#include "kannan/space.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace kannan {

// Total self-map on a finite space, stored as an image table indexed by
// point. Validated on construction: one image per domain point, every image
// inside the domain.
class FiniteSelfMap {
 public:
  FiniteSelfMap(std::size_t domain_size, std::vector<PointId> images);

  static FiniteSelfMap identity(std::size_t domain_size);

  PointId operator()(PointId p) const { return images_[p.index]; }
  std::size_t size() const { return images_.size(); }
  const std::vector<PointId>& images() const { return images_; }
  bool is_identity() const;

  bool operator==(const FiniteSelfMap&) const = default;

 private:
  std::vector<PointId> images_;
};

struct InjectivityResult {
  bool injective = false;
  // Lexicographically smallest pair of distinct points with equal images;
  // present iff not injective.
  std::optional<PointPair> collision;

  bool operator==(const InjectivityResult&) const = default;
};

InjectivityResult check_injective(const FiniteSelfMap& map);

enum class Trivalent { Yes, No, Undecided };

enum class ConvergenceRationale {
  // Finite space: every sequence has a constant subsequence.
  FinitePigeonhole,
  // Finite space and injective map: convergence of images pins the sequence.
  FiniteInjective,
  // Finite space, non-injective map: sequential convergence is not decided.
  FiniteNonInjective,
  // Built-in analytic family; property of its strictly monotone auxiliary.
  BuiltInAnalytic,
};

struct ConvergenceVerdict {
  Trivalent verdict = Trivalent::Undecided;
  ConvergenceRationale rationale = ConvergenceRationale::FiniteNonInjective;

  bool operator==(const ConvergenceVerdict&) const = default;
};

struct MapProperties {
  InjectivityResult injectivity;
  ConvergenceVerdict subsequentially_convergent;
  ConvergenceVerdict sequentially_convergent;

  bool operator==(const MapProperties&) const = default;
};

const char* trivalent_name(Trivalent value);
const char* rationale_name(ConvergenceRationale value);

// Built-in analytic family: the space {0} u {1/4, 1/5, ...} under the
// absolute-difference metric, the shift 1/n -> 1/(n+1) fixing 0, and the
// auxiliary 1/n -> 1/n^n fixing 0. "truncation" is the largest n kept.
struct AnalyticFamily {
  enum class Id { Kannan23 };

  Id id = Id::Kannan23;
  std::uint32_t truncation = 0;

  bool operator==(const AnalyticFamily&) const = default;
};

class TruncationTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Auxiliary map used by the extended contraction condition. Three forms:
//   identity   the classical condition
//   table      an explicit self-map on the host space, distances measured
//              in the host space
//   analytic   the built-in family's auxiliary; its images leave the
//              truncated point set, so it is kept as exact rational values
//              with |a - b| distances
class AuxiliaryMap {
 public:
  static AuxiliaryMap identity();
  static AuxiliaryMap from_table(FiniteSelfMap table);
  static AuxiliaryMap from_analytic_values(std::vector<Rational> values);

  bool is_identity() const;
  const FiniteSelfMap* table() const;
  const std::vector<Rational>* analytic_values() const;

  // d(T a, T b), exact in all three forms.
  Rational image_distance(const FiniteSpace& space, PointId a, PointId b) const;

  bool operator==(const AuxiliaryMap&) const = default;

 private:
  struct Identity {
    bool operator==(const Identity&) const = default;
  };
  explicit AuxiliaryMap(std::variant<Identity, FiniteSelfMap, std::vector<Rational>> form)
      : form_(std::move(form)) {}

  std::variant<Identity, FiniteSelfMap, std::vector<Rational>> form_;
};

InjectivityResult check_injective(const AuxiliaryMap& aux,
                                  std::size_t domain_size);

// On a finite space every sequence has a constant subsequence, so
// subsequential convergence is always Yes. Sequential convergence is Yes for
// injective maps and Undecided otherwise; the classification never guesses.
MapProperties classify_convergence(const FiniteSelfMap& map);
MapProperties classify_convergence(const AnalyticFamily& family);
MapProperties classify_convergence(const AuxiliaryMap& aux,
                                   std::size_t domain_size);

// The family realized as finite data: truncated space, clamped shift map,
// and the analytic auxiliary.
struct RealizedFamily {
  FiniteSpace space;
  FiniteSelfMap self_map;   // 0 -> 0, 1/n -> 1/(n+1), boundary fixed
  AuxiliaryMap aux_map;     // 0 -> 0, 1/n -> 1/n^n as exact rationals
  AnalyticFamily family;
  // The truncation boundary 1/N is fixed by self_map only because the point
  // set ends there; pairs touching it are excluded from contraction analysis.
  PointId clamp_point;

  std::set<PointPair> clamp_pairs() const;
};

// Realizes the family over {0, 1/4, ..., 1/truncation}, kind Metric.
// Throws TruncationTooSmall for truncation < 5.
RealizedFamily realize_family(const AnalyticFamily& family);

}  // namespace kannan
