#pragma once

#include "kannan/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kannan {

// Index of a point within its space's ordered point list.
struct PointId {
  std::uint32_t index = 0;
  auto operator<=>(const PointId&) const = default;
};

// Unordered pair of points, normalized so first <= second. a == b is allowed
// (the contraction conditions quantify over all x, y including x = y).
struct PointPair {
  PointId first;
  PointId second;

  PointPair() = default;
  PointPair(PointId a, PointId b)
      : first(a <= b ? a : b), second(a <= b ? b : a) {}

  bool contains(PointId p) const { return p == first || p == second; }
  auto operator<=>(const PointPair&) const = default;
};

// A distance table that cannot be analyzed at all: missing or duplicate pair
// entries, negative values, unknown or duplicate labels.
class MalformedSpace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite labeled point set with an exact rational distance table. The table
// is plain data, not a certified metric: validate_metric and
// validate_generalized_metric decide which axioms actually hold. The kind tag
// records what the space claims to be.
//
// Immutable after construction; all operations on spaces are pure, so values
// may be shared freely across threads.
class FiniteSpace {
 public:
  enum class Kind { Metric, Generalized };

  struct DistanceEntry {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    Rational value;
  };

  // Builds a symmetric table from per-unordered-pair entries. Every pair of
  // distinct points must appear exactly once; the diagonal is implicitly 0.
  // Throws MalformedSpace on self-pairs, duplicates, gaps, out-of-range
  // indices, negative values, or empty/duplicate labels.
  static FiniteSpace from_pairs(Kind kind, std::vector<std::string> labels,
                                const std::vector<DistanceEntry>& distances);

  // Accepts an arbitrary full table (possibly asymmetric, possibly with a
  // nonzero diagonal) so the validators can report axiom violations on it.
  // Negative entries are still rejected as malformed input.
  static FiniteSpace from_matrix(Kind kind, std::vector<std::string> labels,
                                 std::vector<std::vector<Rational>> table);

  Kind kind() const { return kind_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(PointId p) const { return labels_[p.index]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<PointId> find(std::string_view label) const;
  const Rational& distance(PointId a, PointId b) const {
    return table_[a.index * labels_.size() + b.index];
  }

  bool operator==(const FiniteSpace&) const = default;

 private:
  FiniteSpace(Kind kind, std::vector<std::string> labels,
              std::vector<Rational> table);

  Kind kind_;
  std::vector<std::string> labels_;
  std::vector<Rational> table_;  // row-major size() x size()
};

struct AxiomViolation {
  enum class Axiom {
    NonNegativity,
    IdentityOfIndiscernibles,
    Symmetry,
    Triangle,
    Rectangular,
  };

  Axiom axiom{};
  // Axiom-specific witness order:
  //   IdentityOfIndiscernibles  (x, x) or (x, y)
  //   Symmetry                  (x, y) with x < y
  //   Triangle                  (x, w, y) meaning d(x,y) > d(x,w) + d(w,y)
  //   Rectangular               (x, w, z, y) meaning
  //                             d(x,y) > d(x,w) + d(w,z) + d(z,y)
  std::vector<PointId> witness;
  Rational lhs;
  Rational rhs;

  bool operator==(const AxiomViolation&) const = default;
};

const char* axiom_name(AxiomViolation::Axiom axiom);

// Complete list of metric-axiom violations (identity of indiscernibles,
// symmetry, triangle inequality), sorted by (axiom, witness). Empty iff the
// table is a metric.
std::vector<AxiomViolation> validate_metric(const FiniteSpace& space);

// Same shared axioms with the rectangular inequality
//   d(x,y) <= d(x,w) + d(w,z) + d(z,y),  w != z,  w,z outside {x,y}
// in place of the triangle inequality. x = y is included in the quantifier
// and is vacuously satisfied on a table with a zero diagonal. Spaces with
// fewer than four points admit no (w,z) choice at all, so the rectangular
// part holds vacuously there. Empty iff the table is a generalized metric.
std::vector<AxiomViolation> validate_generalized_metric(
    const FiniteSpace& space);

}  // namespace kannan
