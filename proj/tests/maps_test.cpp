#include "kannan/maps.hpp"

#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using kannan::AnalyticFamily;
using kannan::AuxiliaryMap;
using kannan::BigInt;
using kannan::check_injective;
using kannan::classify_convergence;
using kannan::ConvergenceRationale;
using kannan::FiniteSelfMap;
using kannan::PointId;
using kannan::PointPair;
using kannan::Rational;
using kannan::realize_family;
using kannan::RealizedFamily;
using kannan::Trivalent;
using kannan::TruncationTooSmall;

namespace {

// n^n by plain repeated multiplication, independent of rational_pow.
BigInt self_power(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 0; i < n; ++i) {
    out *= n;
  }
  return out;
}

AnalyticFamily family(std::uint32_t n) {
  return AnalyticFamily{AnalyticFamily::Id::Kannan23, n};
}

}  // namespace

TEST_CASE("self-map construction is validated") {
  CHECK_THROWS_AS(FiniteSelfMap(3, {PointId{0}, PointId{1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteSelfMap(2, {PointId{0}, PointId{2}}),
                  std::invalid_argument);
  CHECK(FiniteSelfMap::identity(4).is_identity());
  CHECK_FALSE(testsupport::example26_t().is_identity());
}

TEST_CASE("injectivity checks") {
  CHECK(check_injective(testsupport::example26_t()).injective);
  CHECK(check_injective(FiniteSelfMap::identity(5)).injective);

  const FiniteSelfMap constant(2, {PointId{0}, PointId{0}});
  const auto result = check_injective(constant);
  CHECK_FALSE(result.injective);
  REQUIRE(result.collision);
  CHECK(*result.collision == PointPair(PointId{0}, PointId{1}));
}

TEST_CASE("convergence classification on finite maps") {
  const auto injective = classify_convergence(testsupport::example26_t());
  CHECK(injective.subsequentially_convergent.verdict == Trivalent::Yes);
  CHECK(injective.subsequentially_convergent.rationale ==
        ConvergenceRationale::FinitePigeonhole);
  CHECK(injective.sequentially_convergent.verdict == Trivalent::Yes);
  CHECK(injective.sequentially_convergent.rationale ==
        ConvergenceRationale::FiniteInjective);

  const FiniteSelfMap constant(3, {PointId{1}, PointId{1}, PointId{1}});
  const auto non_injective = classify_convergence(constant);
  CHECK(non_injective.subsequentially_convergent.verdict == Trivalent::Yes);
  CHECK(non_injective.sequentially_convergent.verdict == Trivalent::Undecided);
  CHECK(non_injective.sequentially_convergent.rationale ==
        ConvergenceRationale::FiniteNonInjective);

  const auto analytic = classify_convergence(family(30));
  CHECK(analytic.subsequentially_convergent.verdict == Trivalent::Yes);
  CHECK(analytic.sequentially_convergent.verdict == Trivalent::Yes);
  CHECK(analytic.sequentially_convergent.rationale ==
        ConvergenceRationale::BuiltInAnalytic);
}

TEST_CASE("realize_family basic shape") {
  const RealizedFamily r = realize_family(family(6));
  CHECK(r.space.labels() ==
        std::vector<std::string>{"0", "1/4", "1/5", "1/6"});
  CHECK(r.space.kind() == kannan::FiniteSpace::Kind::Metric);
  CHECK(r.clamp_point == PointId{3});

  const auto* values = r.aux_map.analytic_values();
  REQUIRE(values);
  CHECK((*values)[0] == Rational(0));
  CHECK((*values)[1] == Rational(1, 256));
  CHECK((*values)[2] == Rational(1, 3125));  // 5^5 by direct exponentiation
  CHECK((*values)[2] == Rational(BigInt(1), self_power(5)));
  CHECK((*values)[3] == Rational(BigInt(1), self_power(6)));

  // S: 0 fixed, 1/4 -> 1/5, 1/5 -> 1/6, boundary clamp 1/6 -> 1/6.
  CHECK(r.self_map(PointId{0}) == PointId{0});
  CHECK(r.self_map(PointId{1}) == PointId{2});
  CHECK(r.self_map(PointId{2}) == PointId{3});
  CHECK(r.self_map(PointId{3}) == PointId{3});
}

TEST_CASE("realize_family exact distances and big denominators") {
  const RealizedFamily r5 = realize_family(family(5));
  REQUIRE(r5.space.size() == 3);
  CHECK(r5.space.distance(PointId{1}, PointId{2}) == Rational(1, 20));

  const RealizedFamily r50 = realize_family(family(50));
  const auto* values = r50.aux_map.analytic_values();
  REQUIRE(values);
  const Rational last = values->back();
  CHECK(denominator(last) == self_power(50));
  CHECK(denominator(last).str().size() == 85);

  CHECK_THROWS_AS(realize_family(family(4)), TruncationTooSmall);
}

TEST_CASE("property: realized family is a metric space with injective aux") {
  for (std::uint32_t n = 5; n <= 60; ++n) {
    const RealizedFamily r = realize_family(family(n));
    CHECK(kannan::validate_metric(r.space).empty());
    CHECK(check_injective(r.aux_map, r.space.size()).injective);
    CHECK(r.space.size() == n - 2);
    CHECK(r.clamp_pairs().size() == r.space.size());
  }
}

TEST_CASE("auxiliary map distance forms") {
  const auto space = testsupport::example26_space();
  const auto identity = AuxiliaryMap::identity();
  CHECK(identity.is_identity());
  CHECK(identity.image_distance(space, PointId{0}, PointId{1}) == Rational(3));

  const auto table = AuxiliaryMap::from_table(testsupport::example26_t());
  CHECK_FALSE(table.is_identity());
  // d(T1, T2) = d(4, 3) = 4
  CHECK(table.image_distance(space, PointId{0}, PointId{1}) == Rational(4));

  const auto analytic = AuxiliaryMap::from_analytic_values(
      {Rational(0), Rational(1, 4), Rational(1, 2)});
  CHECK(analytic.image_distance(space, PointId{1}, PointId{2}) ==
        Rational(1, 4));
  CHECK(analytic.image_distance(space, PointId{2}, PointId{1}) ==
        Rational(1, 4));

  const auto duplicated = AuxiliaryMap::from_analytic_values(
      {Rational(1, 2), Rational(0), Rational(1, 2)});
  const auto result = check_injective(duplicated, 3);
  CHECK_FALSE(result.injective);
  REQUIRE(result.collision);
  CHECK(*result.collision == PointPair(PointId{0}, PointId{2}));
}

TEST_CASE("convergence classification through auxiliary forms") {
  const auto identity_props = classify_convergence(AuxiliaryMap::identity(), 4);
  CHECK(identity_props.injectivity.injective);
  CHECK(identity_props.sequentially_convergent.verdict == Trivalent::Yes);

  const RealizedFamily r = realize_family(family(10));
  const auto analytic_props = classify_convergence(r.aux_map, r.space.size());
  CHECK(analytic_props.injectivity.injective);
  CHECK(analytic_props.subsequentially_convergent.rationale ==
        ConvergenceRationale::BuiltInAnalytic);
}
