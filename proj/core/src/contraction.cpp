#include "kannan/contraction.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace kannan {

namespace {

void require_compatible(const FiniteSpace& space, const FiniteSelfMap& map,
                        const char* role) {
  if (map.size() != space.size()) {
    throw std::invalid_argument(std::string(role) +
                                " map does not match the space's point count");
  }
}

// Shared max-of-ratios reduction. The numerator/denominator callback keeps
// the two conditions' formulas in their own routines.
template <typename PairValue>
LambdaVerdict scan_pairs(const FiniteSpace& space,
                         const std::set<PointPair>& excluded,
                         PairValue&& value_of) {
  LambdaVerdict verdict;
  verdict.excluded_pairs = excluded;
  verdict.lambda_min = Rational(0);
  const std::uint32_t n = static_cast<std::uint32_t>(space.size());
  bool have_pair = false;
  for (std::uint32_t i = 0; i < n && !verdict.infinite; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      const PointPair pair(PointId{i}, PointId{j});
      if (excluded.contains(pair)) {
        continue;
      }
      auto [num, den] = value_of(pair.first, pair.second);
      if (num == 0) {
        // 0/0 and 0/positive both put no constraint on lambda.
        if (!have_pair) {
          have_pair = true;
          verdict.argmax_pair = pair;
        }
        continue;
      }
      if (den == 0) {
        verdict.infinite = true;
        verdict.argmax_pair = pair;
        break;
      }
      const Rational ratio = num / den;
      if (!have_pair || ratio > verdict.lambda_min) {
        verdict.lambda_min = ratio;
        verdict.argmax_pair = pair;
      }
      have_pair = true;
    }
  }
  if (verdict.infinite) {
    verdict.lambda_min = Rational(0);
    verdict.feasible_below_half = false;
  } else {
    verdict.feasible_below_half = verdict.lambda_min < Rational(1, 2);
  }
  return verdict;
}

}  // namespace

LambdaVerdict kannan_lambda(const FiniteSpace& space, const FiniteSelfMap& s,
                            const std::set<PointPair>& excluded) {
  require_compatible(space, s, "self");
  return scan_pairs(space, excluded, [&](PointId x, PointId y) {
    const PointId sx = s(x);
    const PointId sy = s(y);
    return std::pair<Rational, Rational>(
        space.distance(sx, sy),
        space.distance(x, sx) + space.distance(y, sy));
  });
}

LambdaVerdict t_kannan_lambda(const FiniteSpace& space, const FiniteSelfMap& s,
                              const AuxiliaryMap& aux,
                              const std::set<PointPair>& excluded) {
  require_compatible(space, s, "self");
  if (const auto* table = aux.table()) {
    require_compatible(space, *table, "auxiliary");
  }
  return scan_pairs(space, excluded, [&](PointId x, PointId y) {
    const PointId sx = s(x);
    const PointId sy = s(y);
    return std::pair<Rational, Rational>(
        aux.image_distance(space, sx, sy),
        aux.image_distance(space, x, sx) + aux.image_distance(space, y, sy));
  });
}

std::optional<PointPair> condition_violation_at(
    const FiniteSpace& space, const FiniteSelfMap& s, const AuxiliaryMap& aux,
    const Rational& lambda, const std::set<PointPair>& excluded) {
  require_compatible(space, s, "self");
  const std::uint32_t n = static_cast<std::uint32_t>(space.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      const PointPair pair(PointId{i}, PointId{j});
      if (excluded.contains(pair)) {
        continue;
      }
      const PointId sx = s(pair.first);
      const PointId sy = s(pair.second);
      const Rational num = aux.image_distance(space, sx, sy);
      const Rational den = aux.image_distance(space, pair.first, sx) +
                           aux.image_distance(space, pair.second, sy);
      if (num > lambda * den) {
        return pair;
      }
    }
  }
  return std::nullopt;
}

SearchOutcome search_certificate(const FiniteSpace& space,
                                 const FiniteSelfMap& s,
                                 const SearchOptions& options) {
  require_compatible(space, s, "self");
  if (options.lambda_cap < 0 || options.lambda_cap >= Rational(1, 2)) {
    throw LambdaOutOfRange("lambda cap must lie in [0, 1/2)");
  }
  if (space.size() > options.max_points) {
    throw SearchBudgetExceeded(
        "certificate search is exhaustive over |X|! permutations; refusing " +
        std::to_string(space.size()) + " points (budget " +
        std::to_string(options.max_points) + ")");
  }

  // An injective self-map on a finite set is a permutation, so both search
  // spaces walk the same candidates, in lexicographic image order.
  std::vector<std::uint32_t> images(space.size());
  std::iota(images.begin(), images.end(), 0);

  SearchOutcome outcome;
  do {
    ++outcome.examined;
    std::vector<PointId> table(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      table[i] = PointId{images[i]};
    }
    FiniteSelfMap candidate(space.size(), std::move(table));
    const LambdaVerdict verdict = t_kannan_lambda(
        space, s, AuxiliaryMap::from_table(candidate), options.excluded);
    if (!verdict.infinite && verdict.lambda_min <= options.lambda_cap) {
      outcome.certificate = Certificate{std::move(candidate),
                                        verdict.lambda_min,
                                        classify_convergence(candidate)};
      return outcome;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return outcome;
}

const char* hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::SpaceAxioms:
      return "space-axioms";
    case Hypothesis::AuxInjective:
      return "aux-injective";
    case Hypothesis::ContractionFeasible:
      return "contraction-feasible";
    case Hypothesis::AuxConvergence:
      return "aux-convergence";
  }
  return "unknown";
}

namespace {

TheoremCheck check_theorem(const std::vector<AxiomViolation>& violations,
                           const LambdaVerdict& extended,
                           const MapProperties& aux_properties) {
  TheoremCheck check;
  if (!violations.empty()) {
    check.failed.push_back(Hypothesis::SpaceAxioms);
  }
  if (!aux_properties.injectivity.injective) {
    check.failed.push_back(Hypothesis::AuxInjective);
  }
  if (extended.infinite || !extended.feasible_below_half) {
    check.failed.push_back(Hypothesis::ContractionFeasible);
  }
  if (aux_properties.subsequentially_convergent.verdict != Trivalent::Yes) {
    check.failed.push_back(Hypothesis::AuxConvergence);
  }
  check.applies = check.failed.empty();
  return check;
}

}  // namespace

AnalysisReport analyze(const FiniteSpace& space, const FiniteSelfMap& s,
                       const AuxiliaryMap& aux, const AnalyzeOptions& options) {
  AnalysisReport report;
  report.metric_violations = validate_metric(space);
  report.generalized_violations = validate_generalized_metric(space);
  report.classical = kannan_lambda(space, s, options.excluded);
  report.extended = t_kannan_lambda(space, s, aux, options.excluded);
  report.aux_is_identity = aux.is_identity();
  report.aux_properties = classify_convergence(aux, space.size());
  report.metric_theorem =
      check_theorem(report.metric_violations, report.extended,
                    report.aux_properties);
  report.generalized_theorem =
      check_theorem(report.generalized_violations, report.extended,
                    report.aux_properties);
  return report;
}

}  // namespace kannan
