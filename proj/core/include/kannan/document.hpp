#pragma once

#include "kannan/contraction.hpp"
#include "kannan/iteration.hpp"
#include "kannan/maps.hpp"
#include "kannan/space.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kannan {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A space-definition document, either explicit (points + distances + named
// maps) or realized from a built-in family. JSON on disk with fields:
//   kind       "metric" | "generalized"
//   points     array of unique labels
//   distances  array of [label, label, rational-string], one entry per
//              unordered pair of distinct points
//   maps       object of name -> { label: label } total tables
//   families   array with a single { "family_id": "kannan23", "N": n }
// Exactly one of {points+distances, families} must be present; family
// documents define the maps "S" and "T" themselves.
struct LoadedDocument {
  FiniteSpace space;
  FiniteSpace::Kind declared_kind;
  std::map<std::string, FiniteSelfMap> maps;
  std::optional<AnalyticFamily> family;
  std::optional<PointId> clamp_point;
  std::optional<AuxiliaryMap> family_aux;  // the family's analytic "T"

  const FiniteSelfMap* find_map(const std::string& name) const;
  // Resolves "T" to the analytic auxiliary on family documents, otherwise a
  // named table. nullopt when the name is unknown.
  std::optional<AuxiliaryMap> find_aux(const std::string& name) const;
  std::set<PointPair> clamp_pairs() const;
};

LoadedDocument parse_space_document(const std::string& text,
                                    std::string_view origin = "<string>");
LoadedDocument load_space_document(const std::string& path);

// Machine-readable report. Plain serializable data with label strings and
// canonical rational strings so that parse_report(emit_report(r)) == r.
namespace report {

struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string lhs;
  std::string rhs;

  bool operator==(const Violation&) const = default;
};

struct Lambda {
  bool infinite = false;
  std::string lambda_min;  // empty when infinite
  bool feasible_below_half = false;
  std::vector<std::string> argmax_pair;  // empty or two labels
  std::vector<std::vector<std::string>> excluded_pairs;

  bool operator==(const Lambda&) const = default;
};

struct Properties {
  bool injective = false;
  std::vector<std::string> collision;  // empty or two labels
  // Continuity never needs deciding in scope: every map on a finite discrete
  // space is continuous, and the built-in analytic auxiliary is continuous;
  // recorded as an automatic yes.
  std::string continuous;
  std::string continuity_rationale;
  std::string subsequentially_convergent;
  std::string subsequential_rationale;
  std::string sequentially_convergent;
  std::string sequential_rationale;

  bool operator==(const Properties&) const = default;
};

struct Theorem {
  std::string name;
  bool applies = false;
  std::vector<std::string> failed_hypotheses;

  bool operator==(const Theorem&) const = default;
};

struct Analysis {
  std::vector<Violation> metric_violations;
  std::vector<Violation> generalized_violations;
  Lambda classical;
  Lambda extended;
  bool aux_is_identity = true;
  Properties aux_properties;
  Theorem metric_theorem;
  Theorem generalized_theorem;

  bool operator==(const Analysis&) const = default;
};

struct FixedPointEntry {
  std::string point;
  std::string residual;
  bool unique = false;
  std::vector<std::string> other;  // empty or one label

  bool operator==(const FixedPointEntry&) const = default;
};

struct TrajectoryEntry {
  std::string start;
  std::vector<std::string> points;
  std::vector<std::string> aux_gaps;
  std::string termination;  // "fixed-point" | "cycle" | "max-iter"
  std::string fixed_point;  // empty unless fixed-point
  bool at_clamp = false;
  std::vector<std::string> cycle;
  std::string lambda_used;  // empty unless a bound check ran

  bool operator==(const TrajectoryEntry&) const = default;
};

struct StepBoundEntry {
  std::uint64_t index = 0;
  std::string gap;
  std::string one_step_bound;  // empty at index 0
  bool one_step_holds = true;
  std::string geometric_bound;
  bool geometric_holds = true;

  bool operator==(const StepBoundEntry&) const = default;
};

struct TailBoundEntry {
  std::uint64_t later = 0;
  std::uint64_t earlier = 0;
  std::string distance;
  std::string bound;
  bool holds = true;

  bool operator==(const TailBoundEntry&) const = default;
};

struct Bounds {
  std::string lambda;
  std::string decay;
  std::vector<StepBoundEntry> steps;
  std::vector<TailBoundEntry> tails;
  bool all_hold = true;

  bool operator==(const Bounds&) const = default;
};

struct CandidateCheck {
  std::string name;
  bool valid = false;
  std::string lambda;  // empty when invalid because no finite constant

  bool operator==(const CandidateCheck&) const = default;
};

struct Search {
  std::string lambda_cap;
  std::uint64_t examined = 0;
  bool found = false;
  std::map<std::string, std::string> certificate;  // label -> label
  std::string certificate_lambda;
  Properties certificate_properties;
  std::vector<CandidateCheck> verified;

  bool operator==(const Search&) const = default;
};

struct Document {
  std::string command;
  std::string input;
  std::string declared_kind;
  std::vector<std::string> points;
  std::map<std::string, std::string> options;
  std::optional<Analysis> analysis;
  std::optional<std::vector<Violation>> metric_violations;
  std::optional<std::vector<Violation>> generalized_violations;
  std::optional<std::vector<FixedPointEntry>> fixed_points;
  std::optional<TrajectoryEntry> trajectory;
  std::optional<Bounds> bounds;
  std::optional<Search> search;
  int exit_code = 0;

  bool operator==(const Document&) const = default;
};

// Conversions from core results to report entries (labels resolved against
// the space).
Violation make_violation(const FiniteSpace& space, const AxiomViolation& v);
Lambda make_lambda(const FiniteSpace& space, const LambdaVerdict& v);
Properties make_properties(const FiniteSpace& space, const MapProperties& p);
Analysis make_analysis(const FiniteSpace& space, const AnalysisReport& r);
FixedPointEntry make_fixed_point(const FiniteSpace& space,
                                 const FixedPointCertificate& c);
TrajectoryEntry make_trajectory(const FiniteSpace& space, const Trajectory& t,
                                std::optional<PointId> clamp_point);
Bounds make_bounds(const BoundReport& b);

// Deterministic two-space-indented JSON; byte-identical across runs for
// equal documents.
std::string emit_report(const Document& doc);
Document parse_report(const std::string& text);

}  // namespace report

}  // namespace kannan
