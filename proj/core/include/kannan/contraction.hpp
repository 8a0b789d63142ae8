#pragma once

#include "kannan/maps.hpp"
#include "kannan/space.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace kannan {

class LambdaOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Minimal contraction constant of a Kannan-type condition: the exact maximum
// over included unordered pairs of numerator/denominator, with 0/0 counting
// as 0. A positive numerator over a zero denominator means no finite lambda
// works; the verdict is then marked infinite.
struct LambdaVerdict {
  bool infinite = false;
  Rational lambda_min;  // 0 when there are no contributing pairs
  bool feasible_below_half = false;
  // Canonically smallest pair attaining the maximum (or, when infinite, the
  // first positive/0 pair); absent when no pair contributes.
  std::optional<PointPair> argmax_pair;
  std::set<PointPair> excluded_pairs;

  bool operator==(const LambdaVerdict&) const = default;
};

// Classical condition: d(Sx,Sy) <= lambda * (d(x,Sx) + d(y,Sy)).
LambdaVerdict kannan_lambda(const FiniteSpace& space, const FiniteSelfMap& s,
                            const std::set<PointPair>& excluded = {});

// Extended condition on auxiliary images:
// d(TSx,TSy) <= lambda * (d(Tx,TSx) + d(Ty,TSy)).
// With the identity auxiliary this coincides with kannan_lambda; both are
// computed by independent scans so that identity can be tested, not assumed.
LambdaVerdict t_kannan_lambda(const FiniteSpace& space, const FiniteSelfMap& s,
                              const AuxiliaryMap& aux,
                              const std::set<PointPair>& excluded = {});

// First (canonical order) included pair violating the extended condition at
// the given lambda, or nullopt if it holds everywhere. Use the identity
// auxiliary for the classical condition.
std::optional<PointPair> condition_violation_at(
    const FiniteSpace& space, const FiniteSelfMap& s, const AuxiliaryMap& aux,
    const Rational& lambda, const std::set<PointPair>& excluded = {});

// An auxiliary map witnessing that the extended condition holds below 1/2.
struct Certificate {
  FiniteSelfMap aux;
  Rational lambda;  // exact minimal constant achieved by aux
  MapProperties properties;

  bool operator==(const Certificate&) const = default;
};

// On a finite set an injective self-map is a bijection, so both search
// spaces enumerate the same maps; the tag is kept for report clarity.
enum class SearchSpace { Permutations, Injections };

struct SearchOptions {
  Rational lambda_cap;
  SearchSpace search_space = SearchSpace::Permutations;
  // Exhaustive enumeration of |X|! candidates; refuse above this size.
  std::size_t max_points = 10;
  std::set<PointPair> excluded;
};

struct SearchOutcome {
  std::optional<Certificate> certificate;
  std::uint64_t examined = 0;

  bool operator==(const SearchOutcome&) const = default;
};

// Enumerates candidate tables in lexicographic image order and returns the
// first (hence lexicographically smallest) injective map whose extended
// condition constant is <= lambda_cap. Throws LambdaOutOfRange unless
// 0 <= lambda_cap < 1/2 and SearchBudgetExceeded when |X| > max_points.
SearchOutcome search_certificate(const FiniteSpace& space,
                                 const FiniteSelfMap& s,
                                 const SearchOptions& options);

// Hypotheses of the fixed-point theorems, tracked per branch.
enum class Hypothesis {
  SpaceAxioms,           // the relevant axiom set validates cleanly
  AuxInjective,          // auxiliary map is one-to-one
  ContractionFeasible,   // extended condition holds for some lambda < 1/2
  AuxConvergence,        // auxiliary map is subsequentially convergent
};

const char* hypothesis_name(Hypothesis h);

struct TheoremCheck {
  bool applies = false;
  std::vector<Hypothesis> failed;  // empty iff applies

  bool operator==(const TheoremCheck&) const = default;
};

struct AnalyzeOptions {
  std::set<PointPair> excluded;
};

// Everything the analysis decides about one (space, S, T) triple.
struct AnalysisReport {
  std::vector<AxiomViolation> metric_violations;
  std::vector<AxiomViolation> generalized_violations;
  LambdaVerdict classical;
  LambdaVerdict extended;
  bool aux_is_identity = true;
  MapProperties aux_properties;
  // Unique-fixed-point theorem for an auxiliary-contractive map on a metric
  // space, and its counterpart on a generalized (rectangular) metric space.
  TheoremCheck metric_theorem;
  TheoremCheck generalized_theorem;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze(const FiniteSpace& space, const FiniteSelfMap& s,
                       const AuxiliaryMap& aux = AuxiliaryMap::identity(),
                       const AnalyzeOptions& options = {});

}  // namespace kannan
