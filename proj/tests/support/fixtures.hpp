#pragma once

// Programmatic copies of the shipped fixture data, so unit tests do not
// depend on the filesystem. Labels "1".."4" map to indices 0..3.

#include "kannan/maps.hpp"
#include "kannan/space.hpp"

#include <vector>

namespace testsupport {

// 4-point generalized metric space: d(1,2)=3, d(1,3)=d(2,3)=1, d(.,4)=4.
inline kannan::FiniteSpace example26_space(
    kannan::FiniteSpace::Kind kind = kannan::FiniteSpace::Kind::Generalized) {
  using kannan::Rational;
  return kannan::FiniteSpace::from_pairs(
      kind, {"1", "2", "3", "4"},
      {{0, 1, Rational(3)},
       {0, 2, Rational(1)},
       {0, 3, Rational(4)},
       {1, 2, Rational(1)},
       {1, 3, Rational(4)},
       {2, 3, Rational(4)}});
}

// S: 1 -> 4, everything else -> 2.
inline kannan::FiniteSelfMap example26_s() {
  using kannan::PointId;
  return kannan::FiniteSelfMap(
      4, {PointId{3}, PointId{1}, PointId{1}, PointId{1}});
}

// Certifying auxiliary: 1 -> 4, 2 -> 3, 3 -> 1, 4 -> 2.
inline kannan::FiniteSelfMap example26_t() {
  using kannan::PointId;
  return kannan::FiniteSelfMap(
      4, {PointId{3}, PointId{2}, PointId{0}, PointId{1}});
}

}  // namespace testsupport
