#include "kannan/maps.hpp"

#include <map>
#include <utility>

namespace kannan {

FiniteSelfMap::FiniteSelfMap(std::size_t domain_size,
                             std::vector<PointId> images)
    : images_(std::move(images)) {
  if (images_.size() != domain_size) {
    throw std::invalid_argument("self-map table must cover every point");
  }
  for (const PointId image : images_) {
    if (image.index >= domain_size) {
      throw std::invalid_argument("self-map image outside the space");
    }
  }
}

FiniteSelfMap FiniteSelfMap::identity(std::size_t domain_size) {
  std::vector<PointId> images(domain_size);
  for (std::uint32_t i = 0; i < domain_size; ++i) {
    images[i] = PointId{i};
  }
  return FiniteSelfMap(domain_size, std::move(images));
}

bool FiniteSelfMap::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i].index != i) {
      return false;
    }
  }
  return true;
}

InjectivityResult check_injective(const FiniteSelfMap& map) {
  std::vector<std::optional<PointId>> preimage(map.size());
  for (std::uint32_t i = 0; i < map.size(); ++i) {
    const PointId image = map(PointId{i});
    if (preimage[image.index]) {
      return {false, PointPair(*preimage[image.index], PointId{i})};
    }
    preimage[image.index] = PointId{i};
  }
  return {true, std::nullopt};
}

const char* trivalent_name(Trivalent value) {
  switch (value) {
    case Trivalent::Yes:
      return "yes";
    case Trivalent::No:
      return "no";
    case Trivalent::Undecided:
      return "undecided";
  }
  return "unknown";
}

const char* rationale_name(ConvergenceRationale value) {
  switch (value) {
    case ConvergenceRationale::FinitePigeonhole:
      return "finite-pigeonhole";
    case ConvergenceRationale::FiniteInjective:
      return "finite-injective";
    case ConvergenceRationale::FiniteNonInjective:
      return "finite-non-injective";
    case ConvergenceRationale::BuiltInAnalytic:
      return "built-in-analytic";
  }
  return "unknown";
}

MapProperties classify_convergence(const FiniteSelfMap& map) {
  MapProperties props;
  props.injectivity = check_injective(map);
  props.subsequentially_convergent = {Trivalent::Yes,
                                      ConvergenceRationale::FinitePigeonhole};
  if (props.injectivity.injective) {
    props.sequentially_convergent = {Trivalent::Yes,
                                     ConvergenceRationale::FiniteInjective};
  } else {
    props.sequentially_convergent = {Trivalent::Undecided,
                                     ConvergenceRationale::FiniteNonInjective};
  }
  return props;
}

MapProperties classify_convergence(const AnalyticFamily& family) {
  (void)family;  // one family so far
  MapProperties props;
  props.injectivity = {true, std::nullopt};
  props.subsequentially_convergent = {Trivalent::Yes,
                                      ConvergenceRationale::BuiltInAnalytic};
  props.sequentially_convergent = {Trivalent::Yes,
                                   ConvergenceRationale::BuiltInAnalytic};
  return props;
}

AuxiliaryMap AuxiliaryMap::identity() { return AuxiliaryMap(Identity{}); }

AuxiliaryMap AuxiliaryMap::from_table(FiniteSelfMap table) {
  return AuxiliaryMap(std::move(table));
}

AuxiliaryMap AuxiliaryMap::from_analytic_values(std::vector<Rational> values) {
  return AuxiliaryMap(std::move(values));
}

bool AuxiliaryMap::is_identity() const {
  return std::holds_alternative<Identity>(form_);
}

const FiniteSelfMap* AuxiliaryMap::table() const {
  return std::get_if<FiniteSelfMap>(&form_);
}

const std::vector<Rational>* AuxiliaryMap::analytic_values() const {
  return std::get_if<std::vector<Rational>>(&form_);
}

Rational AuxiliaryMap::image_distance(const FiniteSpace& space, PointId a,
                                      PointId b) const {
  if (const auto* table = std::get_if<FiniteSelfMap>(&form_)) {
    return space.distance((*table)(a), (*table)(b));
  }
  if (const auto* values = std::get_if<std::vector<Rational>>(&form_)) {
    const Rational diff = (*values)[a.index] - (*values)[b.index];
    return diff < 0 ? Rational(-diff) : diff;
  }
  return space.distance(a, b);
}

InjectivityResult check_injective(const AuxiliaryMap& aux,
                                  std::size_t domain_size) {
  if (const auto* table = aux.table()) {
    return check_injective(*table);
  }
  if (const auto* values = aux.analytic_values()) {
    std::map<Rational, PointId> seen;
    for (std::uint32_t i = 0; i < domain_size && i < values->size(); ++i) {
      auto [it, inserted] = seen.emplace((*values)[i], PointId{i});
      if (!inserted) {
        return {false, PointPair(it->second, PointId{i})};
      }
    }
    return {true, std::nullopt};
  }
  return {true, std::nullopt};
}

MapProperties classify_convergence(const AuxiliaryMap& aux,
                                   std::size_t domain_size) {
  if (const auto* table = aux.table()) {
    return classify_convergence(*table);
  }
  if (aux.analytic_values() != nullptr) {
    MapProperties props = classify_convergence(AnalyticFamily{});
    props.injectivity = check_injective(aux, domain_size);
    return props;
  }
  return classify_convergence(FiniteSelfMap::identity(domain_size));
}

std::set<PointPair> RealizedFamily::clamp_pairs() const {
  std::set<PointPair> pairs;
  for (std::uint32_t i = 0; i < space.size(); ++i) {
    pairs.insert(PointPair(clamp_point, PointId{i}));
  }
  return pairs;
}

RealizedFamily realize_family(const AnalyticFamily& family) {
  if (family.truncation < 5) {
    throw TruncationTooSmall(
        "family truncation must keep at least two non-fixed points (N >= 5)");
  }
  const std::uint32_t last = family.truncation;

  // Point k >= 1 is 1/(k+3); point 0 is 0.
  std::vector<Rational> coords;
  std::vector<std::string> labels;
  coords.emplace_back(0);
  labels.emplace_back("0");
  for (std::uint32_t n = 4; n <= last; ++n) {
    coords.emplace_back(Rational(1, n));
    labels.push_back("1/" + std::to_string(n));
  }
  const std::uint32_t count = static_cast<std::uint32_t>(coords.size());

  std::vector<FiniteSpace::DistanceEntry> distances;
  distances.reserve(count * (count - 1) / 2);
  for (std::uint32_t i = 0; i < count; ++i) {
    for (std::uint32_t j = i + 1; j < count; ++j) {
      Rational diff = coords[i] - coords[j];
      if (diff < 0) {
        diff = -diff;
      }
      distances.push_back({i, j, diff});
    }
  }
  FiniteSpace space = FiniteSpace::from_pairs(
      FiniteSpace::Kind::Metric, std::move(labels), distances);

  std::vector<PointId> shift(count);
  shift[0] = PointId{0};
  for (std::uint32_t k = 1; k + 1 < count; ++k) {
    shift[k] = PointId{k + 1};
  }
  shift[count - 1] = PointId{count - 1};  // truncation clamp

  std::vector<Rational> aux_values(count);
  aux_values[0] = Rational(0);
  for (std::uint32_t k = 1; k < count; ++k) {
    const unsigned n = k + 3;
    aux_values[k] =
        Rational(BigInt(1), boost::multiprecision::pow(BigInt(n), n));
  }

  return RealizedFamily{std::move(space),
                        FiniteSelfMap(count, std::move(shift)),
                        AuxiliaryMap::from_analytic_values(std::move(aux_values)),
                        family,
                        PointId{count - 1}};
}

}  // namespace kannan
