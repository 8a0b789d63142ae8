#include "kannan/space.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace kannan {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) {
    throw MalformedSpace("space needs at least one point");
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw MalformedSpace("empty point label");
    }
    if (!seen.insert(label).second) {
      throw MalformedSpace("duplicate point label: " + label);
    }
  }
}

}  // namespace

FiniteSpace::FiniteSpace(Kind kind, std::vector<std::string> labels,
                         std::vector<Rational> table)
    : kind_(kind), labels_(std::move(labels)), table_(std::move(table)) {}

FiniteSpace FiniteSpace::from_pairs(
    Kind kind, std::vector<std::string> labels,
    const std::vector<DistanceEntry>& distances) {
  check_labels(labels);
  const std::size_t n = labels.size();
  std::vector<Rational> table(n * n, Rational(0));
  std::vector<bool> covered(n * n, false);
  for (const auto& entry : distances) {
    if (entry.a >= n || entry.b >= n) {
      throw MalformedSpace("distance entry references an unknown point");
    }
    if (entry.a == entry.b) {
      throw MalformedSpace("distance entry for a point against itself: " +
                           labels[entry.a]);
    }
    if (entry.value < 0) {
      throw MalformedSpace("negative distance between " + labels[entry.a] +
                           " and " + labels[entry.b]);
    }
    const std::size_t ij = entry.a * n + entry.b;
    const std::size_t ji = entry.b * n + entry.a;
    if (covered[ij]) {
      throw MalformedSpace("duplicate distance entry for " + labels[entry.a] +
                           " and " + labels[entry.b]);
    }
    covered[ij] = covered[ji] = true;
    table[ij] = entry.value;
    table[ji] = entry.value;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!covered[i * n + j]) {
        throw MalformedSpace("missing distance entry for " + labels[i] +
                             " and " + labels[j]);
      }
    }
  }
  return FiniteSpace(kind, std::move(labels), std::move(table));
}

FiniteSpace FiniteSpace::from_matrix(Kind kind,
                                     std::vector<std::string> labels,
                                     std::vector<std::vector<Rational>> table) {
  check_labels(labels);
  const std::size_t n = labels.size();
  if (table.size() != n) {
    throw MalformedSpace("distance table has wrong number of rows");
  }
  std::vector<Rational> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) {
      throw MalformedSpace("distance table has a wrong-sized row");
    }
    for (const auto& value : row) {
      if (value < 0) {
        throw MalformedSpace("negative distance entry");
      }
      flat.push_back(value);
    }
  }
  return FiniteSpace(kind, std::move(labels), std::move(flat));
}

std::optional<PointId> FiniteSpace::find(std::string_view label) const {
  for (std::uint32_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) {
      return PointId{i};
    }
  }
  return std::nullopt;
}

const char* axiom_name(AxiomViolation::Axiom axiom) {
  switch (axiom) {
    case AxiomViolation::Axiom::NonNegativity:
      return "non-negativity";
    case AxiomViolation::Axiom::IdentityOfIndiscernibles:
      return "identity-of-indiscernibles";
    case AxiomViolation::Axiom::Symmetry:
      return "symmetry";
    case AxiomViolation::Axiom::Triangle:
      return "triangle";
    case AxiomViolation::Axiom::Rectangular:
      return "rectangular";
  }
  return "unknown";
}

namespace {

using Axiom = AxiomViolation::Axiom;

// Axioms (i) and (ii): zero diagonal, positivity off the diagonal, symmetry.
void shared_axioms(const FiniteSpace& s, std::vector<AxiomViolation>& out) {
  const std::uint32_t n = static_cast<std::uint32_t>(s.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    const PointId p{i};
    if (s.distance(p, p) != 0) {
      out.push_back({Axiom::IdentityOfIndiscernibles,
                     {p, p},
                     s.distance(p, p),
                     Rational(0)});
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const PointId x{i};
      const PointId y{j};
      if (s.distance(x, y) == 0) {
        out.push_back(
            {Axiom::IdentityOfIndiscernibles, {x, y}, Rational(0), Rational(0)});
      }
      if (s.distance(x, y) != s.distance(y, x)) {
        const Rational& a = s.distance(x, y);
        const Rational& b = s.distance(y, x);
        out.push_back(
            {Axiom::Symmetry, {x, y}, a > b ? a : b, a > b ? b : a});
      }
    }
  }
}

void sort_violations(std::vector<AxiomViolation>& out) {
  std::sort(out.begin(), out.end(),
            [](const AxiomViolation& a, const AxiomViolation& b) {
              return std::tie(a.axiom, a.witness) <
                     std::tie(b.axiom, b.witness);
            });
}

}  // namespace

std::vector<AxiomViolation> validate_metric(const FiniteSpace& space) {
  std::vector<AxiomViolation> out;
  shared_axioms(space, out);
  const std::uint32_t n = static_cast<std::uint32_t>(space.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      const PointId x{i};
      const PointId y{j};
      for (std::uint32_t k = 0; k < n; ++k) {
        if (k == i || k == j) {
          continue;
        }
        const PointId w{k};
        const Rational path = space.distance(x, w) + space.distance(w, y);
        if (space.distance(x, y) > path) {
          out.push_back({Axiom::Triangle, {x, w, y}, space.distance(x, y), path});
        }
      }
    }
  }
  sort_violations(out);
  return out;
}

std::vector<AxiomViolation> validate_generalized_metric(
    const FiniteSpace& space) {
  std::vector<AxiomViolation> out;
  shared_axioms(space, out);
  const std::uint32_t n = static_cast<std::uint32_t>(space.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      const PointId x{i};
      const PointId y{j};
      for (std::uint32_t k = 0; k < n; ++k) {
        if (k == i || k == j) {
          continue;
        }
        for (std::uint32_t l = 0; l < n; ++l) {
          if (l == k || l == i || l == j) {
            continue;
          }
          const PointId w{k};
          const PointId z{l};
          const Rational path = space.distance(x, w) + space.distance(w, z) +
                                space.distance(z, y);
          if (space.distance(x, y) > path) {
            out.push_back(
                {Axiom::Rectangular, {x, w, z, y}, space.distance(x, y), path});
          }
        }
      }
    }
  }
  sort_violations(out);
  return out;
}

}  // namespace kannan
