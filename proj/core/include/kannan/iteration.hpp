#pragma once

#include "kannan/contraction.hpp"
#include "kannan/maps.hpp"
#include "kannan/space.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kannan {

// Orbit of x_{n+1} = S x_n. On a finite space iteration either reaches a
// fixed point or revisits a point (a cycle); the iteration cap exists for
// truncated analytic realizations and deliberately short runs.
struct Trajectory {
  enum class Termination { FixedPoint, CycleDetected, MaxIterReached };

  PointId start;
  std::vector<PointId> points;     // x_0 .. x_k, each distinct
  // d(T x_n, T x_{n+1}) for consecutive points; filled only when an
  // auxiliary map was supplied to picard, else empty.
  std::vector<Rational> aux_gaps;
  Termination termination = Termination::MaxIterReached;
  std::optional<PointId> fixed_point;  // set iff FixedPoint
  std::vector<PointId> cycle;          // set iff CycleDetected
  // Echoed by callers that ran a bound check on this trajectory.
  std::optional<Rational> lambda_used;

  std::size_t steps() const { return points.empty() ? 0 : points.size() - 1; }

  bool operator==(const Trajectory&) const = default;
};

Trajectory picard(const FiniteSpace& space, const FiniteSelfMap& s,
                  PointId start, std::size_t max_iter,
                  const AuxiliaryMap* aux = nullptr);

// Exact per-trajectory checks of the three convergence bounds that drive the
// fixed-point argument, with q = lambda / (1 - lambda) < 1:
//   one-step    d(Tx_n, Tx_{n+1}) <= q * d(Tx_{n-1}, Tx_n)
//   geometric   d(Tx_n, Tx_{n+1}) <= q^n * d(Tx_0, Tx_1)
//   tail        d(Tx_m, Tx_n)     <= q^n * (1-lambda)/(1-2*lambda)
//                                        * d(Tx_0, Tx_1)   for m > n
struct StepBoundRecord {
  std::size_t index = 0;  // n, starting at 0
  Rational gap;           // d(Tx_n, Tx_{n+1})
  // Absent at n = 0 (there is no previous gap).
  std::optional<Rational> one_step_bound;
  bool one_step_holds = true;
  Rational geometric_bound;
  bool geometric_holds = true;

  bool operator==(const StepBoundRecord&) const = default;
};

struct TailBoundRecord {
  std::size_t later = 0;    // m
  std::size_t earlier = 0;  // n < m
  Rational distance;        // d(Tx_m, Tx_n)
  Rational bound;
  bool holds = true;

  bool operator==(const TailBoundRecord&) const = default;
};

struct BoundReport {
  Rational lambda;
  Rational decay;  // lambda / (1 - lambda)
  std::vector<StepBoundRecord> steps;
  std::vector<TailBoundRecord> tails;
  bool all_hold = true;

  bool operator==(const BoundReport&) const = default;
};

// Recomputes auxiliary gaps from the trajectory's points and evaluates all
// three bounds exactly. Throws LambdaOutOfRange unless 0 <= lambda < 1/2.
// Trajectories with fewer than two points yield an empty, vacuously true
// report. Tail pairs are scanned over the first tail_window points.
BoundReport verify_bounds(const FiniteSpace& space, const Trajectory& traj,
                          const AuxiliaryMap& aux, const Rational& lambda,
                          std::size_t tail_window = 200);

struct FixedPointCertificate {
  PointId point;
  Rational residual;  // d(S(point), point), identically 0 here
  bool unique = false;
  // Another fixed point, present iff unique is false.
  std::optional<PointId> other;

  bool operator==(const FixedPointCertificate&) const = default;
};

// Complete scan for S(p) = p; the theorems' uniqueness claim is checked by
// exhaustion on finite spaces rather than taken on faith.
std::vector<FixedPointCertificate> fixed_points_exhaustive(
    const FiniteSpace& space, const FiniteSelfMap& s);

}  // namespace kannan
