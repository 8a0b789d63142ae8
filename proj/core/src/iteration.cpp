#include "kannan/iteration.hpp"

#include <utility>

namespace kannan {

Trajectory picard(const FiniteSpace& space, const FiniteSelfMap& s,
                  PointId start, std::size_t max_iter,
                  const AuxiliaryMap* aux) {
  if (s.size() != space.size()) {
    throw std::invalid_argument("self map does not match the space");
  }
  if (start.index >= space.size()) {
    throw std::invalid_argument("start point outside the space");
  }
  if (max_iter < 1) {
    throw std::invalid_argument("max_iter must be at least 1");
  }

  Trajectory traj;
  traj.start = start;
  traj.points.push_back(start);

  std::vector<std::size_t> position(space.size(), SIZE_MAX);
  position[start.index] = 0;

  for (;;) {
    const PointId current = traj.points.back();
    const PointId next = s(current);
    if (next == current) {
      traj.termination = Trajectory::Termination::FixedPoint;
      traj.fixed_point = current;
      break;
    }
    if (position[next.index] != SIZE_MAX) {
      traj.termination = Trajectory::Termination::CycleDetected;
      traj.cycle.assign(traj.points.begin() +
                            static_cast<std::ptrdiff_t>(position[next.index]),
                        traj.points.end());
      break;
    }
    if (traj.steps() >= max_iter) {
      traj.termination = Trajectory::Termination::MaxIterReached;
      break;
    }
    if (aux != nullptr) {
      traj.aux_gaps.push_back(aux->image_distance(space, current, next));
    }
    position[next.index] = traj.points.size();
    traj.points.push_back(next);
  }
  return traj;
}

BoundReport verify_bounds(const FiniteSpace& space, const Trajectory& traj,
                          const AuxiliaryMap& aux, const Rational& lambda,
                          std::size_t tail_window) {
  if (lambda < 0 || lambda >= Rational(1, 2)) {
    throw LambdaOutOfRange("bound checks need lambda in [0, 1/2)");
  }

  BoundReport report;
  report.lambda = lambda;
  report.decay = lambda / (1 - lambda);
  if (traj.points.size() < 2) {
    return report;
  }

  const std::size_t gap_count = traj.points.size() - 1;
  std::vector<Rational> gaps;
  gaps.reserve(gap_count);
  for (std::size_t n = 0; n < gap_count; ++n) {
    gaps.push_back(
        aux.image_distance(space, traj.points[n], traj.points[n + 1]));
  }

  report.steps.reserve(gap_count);
  Rational geometric = gaps.front();  // decay^n * gap_0
  for (std::size_t n = 0; n < gap_count; ++n) {
    StepBoundRecord record;
    record.index = n;
    record.gap = gaps[n];
    if (n > 0) {
      geometric *= report.decay;
      record.one_step_bound = report.decay * gaps[n - 1];
      record.one_step_holds = gaps[n] <= *record.one_step_bound;
    }
    record.geometric_bound = geometric;
    record.geometric_holds = gaps[n] <= geometric;
    report.all_hold =
        report.all_hold && record.one_step_holds && record.geometric_holds;
    report.steps.push_back(std::move(record));
  }

  // Tail bound over all recorded index pairs within the window:
  // d(Tx_m, Tx_n) <= decay^n * (1-lambda)/(1-2 lambda) * d(Tx_0, Tx_1).
  const Rational tail_coefficient = (1 - lambda) / (1 - 2 * lambda);
  const std::size_t window = std::min(traj.points.size(), tail_window);
  Rational tail_base = tail_coefficient * gaps.front();  // decay^n * it
  for (std::size_t n = 0; n + 1 < window; ++n) {
    if (n > 0) {
      tail_base *= report.decay;
    }
    for (std::size_t m = n + 1; m < window; ++m) {
      TailBoundRecord record;
      record.later = m;
      record.earlier = n;
      record.distance =
          aux.image_distance(space, traj.points[m], traj.points[n]);
      record.bound = tail_base;
      record.holds = record.distance <= record.bound;
      report.all_hold = report.all_hold && record.holds;
      report.tails.push_back(std::move(record));
    }
  }
  return report;
}

std::vector<FixedPointCertificate> fixed_points_exhaustive(
    const FiniteSpace& space, const FiniteSelfMap& s) {
  if (s.size() != space.size()) {
    throw std::invalid_argument("self map does not match the space");
  }
  std::vector<PointId> fixed;
  for (std::uint32_t i = 0; i < space.size(); ++i) {
    if (s(PointId{i}) == PointId{i}) {
      fixed.push_back(PointId{i});
    }
  }
  std::vector<FixedPointCertificate> certificates;
  certificates.reserve(fixed.size());
  for (const PointId p : fixed) {
    FixedPointCertificate cert;
    cert.point = p;
    cert.residual = space.distance(s(p), p);
    cert.unique = fixed.size() == 1;
    if (!cert.unique) {
      for (const PointId q : fixed) {
        if (q != p) {
          cert.other = q;
          break;
        }
      }
    }
    certificates.push_back(std::move(cert));
  }
  return certificates;
}

}  // namespace kannan
