#include "kannan/document.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace kannan {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view origin, const std::string& message) {
  throw DocumentError(std::string(origin) + ": " + message);
}

FiniteSpace::Kind parse_kind(std::string_view origin, const std::string& kind) {
  if (kind == "metric") {
    return FiniteSpace::Kind::Metric;
  }
  if (kind == "generalized") {
    return FiniteSpace::Kind::Generalized;
  }
  fail(origin, "field 'kind' must be \"metric\" or \"generalized\", got \"" +
                   kind + "\"");
}

const json& require_field(std::string_view origin, const json& j,
                          const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    fail(origin, std::string("missing field '") + name + "'");
  }
  return *it;
}

LoadedDocument load_family(std::string_view origin, FiniteSpace::Kind kind,
                           const json& families) {
  if (!families.is_array() || families.size() != 1) {
    fail(origin, "field 'families' must be an array with exactly one entry");
  }
  const json& entry = families.at(0);
  if (!entry.is_object()) {
    fail(origin, "family entry must be an object");
  }
  const json& id = require_field(origin, entry, "family_id");
  if (!id.is_string() || id.get<std::string>() != "kannan23") {
    fail(origin, "unknown family_id (only \"kannan23\" is built in)");
  }
  const json& n = require_field(origin, entry, "N");
  if (!n.is_number_unsigned()) {
    fail(origin, "family field 'N' must be a non-negative integer");
  }
  const auto truncation = n.get<std::uint64_t>();
  if (truncation < 5) {
    fail(origin, "family field 'N' must be at least 5");
  }
  if (truncation > 10000) {
    fail(origin, "family field 'N' is unreasonably large (max 10000)");
  }

  RealizedFamily realized = realize_family(
      AnalyticFamily{AnalyticFamily::Id::Kannan23,
                     static_cast<std::uint32_t>(truncation)});
  LoadedDocument doc{std::move(realized.space),
                     kind,
                     {},
                     realized.family,
                     realized.clamp_point,
                     std::move(realized.aux_map)};
  doc.maps.emplace("S", std::move(realized.self_map));
  return doc;
}

LoadedDocument load_explicit(std::string_view origin, FiniteSpace::Kind kind,
                             const json& j) {
  const json& points = require_field(origin, j, "points");
  if (!points.is_array() || points.empty()) {
    fail(origin, "field 'points' must be a non-empty array of labels");
  }
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const json& p : points) {
    if (!p.is_string()) {
      fail(origin, "every point label must be a string");
    }
    labels.push_back(p.get<std::string>());
  }

  auto resolve = [&](const std::string& label) -> std::uint32_t {
    for (std::uint32_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) {
        return i;
      }
    }
    fail(origin, "unknown point label \"" + label + "\"");
  };

  const json& distances = require_field(origin, j, "distances");
  if (!distances.is_array()) {
    fail(origin, "field 'distances' must be an array of [a, b, value] triples");
  }
  std::vector<FiniteSpace::DistanceEntry> entries;
  entries.reserve(distances.size());
  for (const json& d : distances) {
    if (!d.is_array() || d.size() != 3 || !d.at(0).is_string() ||
        !d.at(1).is_string() || !d.at(2).is_string()) {
      fail(origin,
           "each distance must be a [label, label, rational-string] triple");
    }
    const std::string value_text = d.at(2).get<std::string>();
    const auto value = parse_rational(value_text);
    if (!value) {
      fail(origin, "bad rational \"" + value_text +
                       "\" (expected \"p\" or \"p/q\" with q > 0)");
    }
    entries.push_back({resolve(d.at(0).get<std::string>()),
                       resolve(d.at(1).get<std::string>()), *value});
  }

  FiniteSpace space = FiniteSpace::from_pairs(kind, labels, entries);

  LoadedDocument doc{std::move(space), kind, {}, std::nullopt, std::nullopt,
                     std::nullopt};
  if (auto it = j.find("maps"); it != j.end()) {
    if (!it->is_object()) {
      fail(origin, "field 'maps' must be an object of name -> table");
    }
    for (const auto& [name, table] : it->items()) {
      if (!table.is_object()) {
        fail(origin, "map \"" + name + "\" must be an object label -> label");
      }
      std::vector<PointId> images(labels.size());
      std::vector<bool> assigned(labels.size(), false);
      for (const auto& [from, to] : table.items()) {
        if (!to.is_string()) {
          fail(origin, "map \"" + name + "\" image for \"" + from +
                           "\" must be a string label");
        }
        const std::uint32_t src = resolve(from);
        if (assigned[src]) {
          fail(origin, "map \"" + name + "\" assigns \"" + from + "\" twice");
        }
        assigned[src] = true;
        images[src] = PointId{resolve(to.get<std::string>())};
      }
      for (std::uint32_t i = 0; i < labels.size(); ++i) {
        if (!assigned[i]) {
          fail(origin, "map \"" + name + "\" is missing an image for \"" +
                           labels[i] + "\"");
        }
      }
      doc.maps.emplace(name, FiniteSelfMap(labels.size(), std::move(images)));
    }
  }
  return doc;
}

}  // namespace

LoadedDocument parse_space_document(const std::string& text,
                                    std::string_view origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, e.what());
  }
  if (!j.is_object()) {
    fail(origin, "document root must be an object");
  }
  const json& kind_field = require_field(origin, j, "kind");
  if (!kind_field.is_string()) {
    fail(origin, "field 'kind' must be a string");
  }
  const FiniteSpace::Kind kind =
      parse_kind(origin, kind_field.get<std::string>());

  const bool has_family = j.contains("families");
  const bool has_points = j.contains("points") || j.contains("distances");
  if (has_family && (has_points || j.contains("maps"))) {
    fail(origin,
         "family documents must not also declare points, distances or maps");
  }
  if (has_family) {
    return load_family(origin, kind, j.at("families"));
  }
  if (!j.contains("points")) {
    fail(origin, "document declares neither points nor families");
  }
  return load_explicit(origin, kind, j);
}

LoadedDocument load_space_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DocumentError(path + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_space_document(buffer.str(), path);
}

const FiniteSelfMap* LoadedDocument::find_map(const std::string& name) const {
  auto it = maps.find(name);
  return it == maps.end() ? nullptr : &it->second;
}

std::optional<AuxiliaryMap> LoadedDocument::find_aux(
    const std::string& name) const {
  if (family && name == "T") {
    return family_aux;
  }
  if (const FiniteSelfMap* table = find_map(name)) {
    return AuxiliaryMap::from_table(*table);
  }
  return std::nullopt;
}

std::set<PointPair> LoadedDocument::clamp_pairs() const {
  std::set<PointPair> pairs;
  if (clamp_point) {
    for (std::uint32_t i = 0; i < space.size(); ++i) {
      pairs.insert(PointPair(*clamp_point, PointId{i}));
    }
  }
  return pairs;
}

namespace report {

namespace {

std::vector<std::string> pair_labels(const FiniteSpace& space,
                                     const PointPair& pair) {
  return {space.label(pair.first), space.label(pair.second)};
}

}  // namespace

Violation make_violation(const FiniteSpace& space, const AxiomViolation& v) {
  Violation out;
  out.axiom = axiom_name(v.axiom);
  out.witness.reserve(v.witness.size());
  for (const PointId p : v.witness) {
    out.witness.push_back(space.label(p));
  }
  out.lhs = format_rational(v.lhs);
  out.rhs = format_rational(v.rhs);
  return out;
}

Lambda make_lambda(const FiniteSpace& space, const LambdaVerdict& v) {
  Lambda out;
  out.infinite = v.infinite;
  out.lambda_min = v.infinite ? "" : format_rational(v.lambda_min);
  out.feasible_below_half = v.feasible_below_half;
  if (v.argmax_pair) {
    out.argmax_pair = pair_labels(space, *v.argmax_pair);
  }
  for (const PointPair& pair : v.excluded_pairs) {
    out.excluded_pairs.push_back(pair_labels(space, pair));
  }
  return out;
}

Properties make_properties(const FiniteSpace& space, const MapProperties& p) {
  Properties out;
  out.injective = p.injectivity.injective;
  if (p.injectivity.collision) {
    out.collision = pair_labels(space, *p.injectivity.collision);
  }
  out.continuous = "yes";
  out.continuity_rationale =
      p.subsequentially_convergent.rationale ==
              ConvergenceRationale::BuiltInAnalytic
          ? "built-in-analytic"
          : "finite-discrete";
  out.subsequentially_convergent =
      trivalent_name(p.subsequentially_convergent.verdict);
  out.subsequential_rationale =
      rationale_name(p.subsequentially_convergent.rationale);
  out.sequentially_convergent =
      trivalent_name(p.sequentially_convergent.verdict);
  out.sequential_rationale =
      rationale_name(p.sequentially_convergent.rationale);
  return out;
}

namespace {

Theorem make_theorem(const char* name, const TheoremCheck& check) {
  Theorem out;
  out.name = name;
  out.applies = check.applies;
  for (const Hypothesis h : check.failed) {
    out.failed_hypotheses.push_back(hypothesis_name(h));
  }
  return out;
}

}  // namespace

Analysis make_analysis(const FiniteSpace& space, const AnalysisReport& r) {
  Analysis out;
  for (const auto& v : r.metric_violations) {
    out.metric_violations.push_back(make_violation(space, v));
  }
  for (const auto& v : r.generalized_violations) {
    out.generalized_violations.push_back(make_violation(space, v));
  }
  out.classical = make_lambda(space, r.classical);
  out.extended = make_lambda(space, r.extended);
  out.aux_is_identity = r.aux_is_identity;
  out.aux_properties = make_properties(space, r.aux_properties);
  out.metric_theorem =
      make_theorem("extended-kannan-metric", r.metric_theorem);
  out.generalized_theorem =
      make_theorem("extended-kannan-generalized", r.generalized_theorem);
  return out;
}

FixedPointEntry make_fixed_point(const FiniteSpace& space,
                                 const FixedPointCertificate& c) {
  FixedPointEntry out;
  out.point = space.label(c.point);
  out.residual = format_rational(c.residual);
  out.unique = c.unique;
  if (c.other) {
    out.other.push_back(space.label(*c.other));
  }
  return out;
}

TrajectoryEntry make_trajectory(const FiniteSpace& space, const Trajectory& t,
                                std::optional<PointId> clamp_point) {
  TrajectoryEntry out;
  out.start = space.label(t.start);
  for (const PointId p : t.points) {
    out.points.push_back(space.label(p));
  }
  for (const Rational& gap : t.aux_gaps) {
    out.aux_gaps.push_back(format_rational(gap));
  }
  switch (t.termination) {
    case Trajectory::Termination::FixedPoint:
      out.termination = "fixed-point";
      break;
    case Trajectory::Termination::CycleDetected:
      out.termination = "cycle";
      break;
    case Trajectory::Termination::MaxIterReached:
      out.termination = "max-iter";
      break;
  }
  if (t.fixed_point) {
    out.fixed_point = space.label(*t.fixed_point);
    out.at_clamp = clamp_point && *t.fixed_point == *clamp_point;
  }
  for (const PointId p : t.cycle) {
    out.cycle.push_back(space.label(p));
  }
  if (t.lambda_used) {
    out.lambda_used = format_rational(*t.lambda_used);
  }
  return out;
}

Bounds make_bounds(const BoundReport& b) {
  Bounds out;
  out.lambda = format_rational(b.lambda);
  out.decay = format_rational(b.decay);
  for (const auto& s : b.steps) {
    StepBoundEntry entry;
    entry.index = s.index;
    entry.gap = format_rational(s.gap);
    entry.one_step_bound =
        s.one_step_bound ? format_rational(*s.one_step_bound) : "";
    entry.one_step_holds = s.one_step_holds;
    entry.geometric_bound = format_rational(s.geometric_bound);
    entry.geometric_holds = s.geometric_holds;
    out.steps.push_back(std::move(entry));
  }
  for (const auto& t : b.tails) {
    TailBoundEntry entry;
    entry.later = t.later;
    entry.earlier = t.earlier;
    entry.distance = format_rational(t.distance);
    entry.bound = format_rational(t.bound);
    entry.holds = t.holds;
    out.tails.push_back(std::move(entry));
  }
  out.all_hold = b.all_hold;
  return out;
}

// nlohmann finds these via argument-dependent lookup; they are only
// referenced inside this translation unit.
void to_json(json& j, const Violation& v) {
  j = json{{"axiom", v.axiom},
           {"witness", v.witness},
           {"lhs", v.lhs},
           {"rhs", v.rhs}};
}

void from_json(const json& j, Violation& v) {
  j.at("axiom").get_to(v.axiom);
  j.at("witness").get_to(v.witness);
  j.at("lhs").get_to(v.lhs);
  j.at("rhs").get_to(v.rhs);
}

void to_json(json& j, const Lambda& l) {
  j = json{{"infinite", l.infinite},
           {"lambda_min", l.lambda_min},
           {"feasible_below_half", l.feasible_below_half},
           {"argmax_pair", l.argmax_pair},
           {"excluded_pairs", l.excluded_pairs}};
}

void from_json(const json& j, Lambda& l) {
  j.at("infinite").get_to(l.infinite);
  j.at("lambda_min").get_to(l.lambda_min);
  j.at("feasible_below_half").get_to(l.feasible_below_half);
  j.at("argmax_pair").get_to(l.argmax_pair);
  j.at("excluded_pairs").get_to(l.excluded_pairs);
}

void to_json(json& j, const Properties& p) {
  j = json{{"injective", p.injective},
           {"collision", p.collision},
           {"continuous", p.continuous},
           {"continuity_rationale", p.continuity_rationale},
           {"subsequentially_convergent", p.subsequentially_convergent},
           {"subsequential_rationale", p.subsequential_rationale},
           {"sequentially_convergent", p.sequentially_convergent},
           {"sequential_rationale", p.sequential_rationale}};
}

void from_json(const json& j, Properties& p) {
  j.at("injective").get_to(p.injective);
  j.at("collision").get_to(p.collision);
  j.at("continuous").get_to(p.continuous);
  j.at("continuity_rationale").get_to(p.continuity_rationale);
  j.at("subsequentially_convergent").get_to(p.subsequentially_convergent);
  j.at("subsequential_rationale").get_to(p.subsequential_rationale);
  j.at("sequentially_convergent").get_to(p.sequentially_convergent);
  j.at("sequential_rationale").get_to(p.sequential_rationale);
}

void to_json(json& j, const Theorem& t) {
  j = json{{"name", t.name},
           {"applies", t.applies},
           {"failed_hypotheses", t.failed_hypotheses}};
}

void from_json(const json& j, Theorem& t) {
  j.at("name").get_to(t.name);
  j.at("applies").get_to(t.applies);
  j.at("failed_hypotheses").get_to(t.failed_hypotheses);
}

void to_json(json& j, const Analysis& a) {
  j = json{{"metric_violations", a.metric_violations},
           {"generalized_violations", a.generalized_violations},
           {"classical", a.classical},
           {"extended", a.extended},
           {"aux_is_identity", a.aux_is_identity},
           {"aux_properties", a.aux_properties},
           {"metric_theorem", a.metric_theorem},
           {"generalized_theorem", a.generalized_theorem}};
}

void from_json(const json& j, Analysis& a) {
  j.at("metric_violations").get_to(a.metric_violations);
  j.at("generalized_violations").get_to(a.generalized_violations);
  j.at("classical").get_to(a.classical);
  j.at("extended").get_to(a.extended);
  j.at("aux_is_identity").get_to(a.aux_is_identity);
  j.at("aux_properties").get_to(a.aux_properties);
  j.at("metric_theorem").get_to(a.metric_theorem);
  j.at("generalized_theorem").get_to(a.generalized_theorem);
}

void to_json(json& j, const FixedPointEntry& f) {
  j = json{{"point", f.point},
           {"residual", f.residual},
           {"unique", f.unique},
           {"other", f.other}};
}

void from_json(const json& j, FixedPointEntry& f) {
  j.at("point").get_to(f.point);
  j.at("residual").get_to(f.residual);
  j.at("unique").get_to(f.unique);
  j.at("other").get_to(f.other);
}

void to_json(json& j, const TrajectoryEntry& t) {
  j = json{{"start", t.start},
           {"points", t.points},
           {"aux_gaps", t.aux_gaps},
           {"termination", t.termination},
           {"fixed_point", t.fixed_point},
           {"at_clamp", t.at_clamp},
           {"cycle", t.cycle},
           {"lambda_used", t.lambda_used}};
}

void from_json(const json& j, TrajectoryEntry& t) {
  j.at("start").get_to(t.start);
  j.at("points").get_to(t.points);
  j.at("aux_gaps").get_to(t.aux_gaps);
  j.at("termination").get_to(t.termination);
  j.at("fixed_point").get_to(t.fixed_point);
  j.at("at_clamp").get_to(t.at_clamp);
  j.at("cycle").get_to(t.cycle);
  j.at("lambda_used").get_to(t.lambda_used);
}

void to_json(json& j, const StepBoundEntry& s) {
  j = json{{"index", s.index},
           {"gap", s.gap},
           {"one_step_bound", s.one_step_bound},
           {"one_step_holds", s.one_step_holds},
           {"geometric_bound", s.geometric_bound},
           {"geometric_holds", s.geometric_holds}};
}

void from_json(const json& j, StepBoundEntry& s) {
  j.at("index").get_to(s.index);
  j.at("gap").get_to(s.gap);
  j.at("one_step_bound").get_to(s.one_step_bound);
  j.at("one_step_holds").get_to(s.one_step_holds);
  j.at("geometric_bound").get_to(s.geometric_bound);
  j.at("geometric_holds").get_to(s.geometric_holds);
}

void to_json(json& j, const TailBoundEntry& t) {
  j = json{{"later", t.later},
           {"earlier", t.earlier},
           {"distance", t.distance},
           {"bound", t.bound},
           {"holds", t.holds}};
}

void from_json(const json& j, TailBoundEntry& t) {
  j.at("later").get_to(t.later);
  j.at("earlier").get_to(t.earlier);
  j.at("distance").get_to(t.distance);
  j.at("bound").get_to(t.bound);
  j.at("holds").get_to(t.holds);
}

void to_json(json& j, const Bounds& b) {
  j = json{{"lambda", b.lambda},
           {"decay", b.decay},
           {"steps", b.steps},
           {"tails", b.tails},
           {"all_hold", b.all_hold}};
}

void from_json(const json& j, Bounds& b) {
  j.at("lambda").get_to(b.lambda);
  j.at("decay").get_to(b.decay);
  j.at("steps").get_to(b.steps);
  j.at("tails").get_to(b.tails);
  j.at("all_hold").get_to(b.all_hold);
}

void to_json(json& j, const CandidateCheck& c) {
  j = json{{"name", c.name}, {"valid", c.valid}, {"lambda", c.lambda}};
}

void from_json(const json& j, CandidateCheck& c) {
  j.at("name").get_to(c.name);
  j.at("valid").get_to(c.valid);
  j.at("lambda").get_to(c.lambda);
}

void to_json(json& j, const Search& s) {
  j = json{{"lambda_cap", s.lambda_cap},
           {"examined", s.examined},
           {"found", s.found},
           {"certificate", s.certificate},
           {"certificate_lambda", s.certificate_lambda},
           {"certificate_properties", s.certificate_properties},
           {"verified", s.verified}};
}

void from_json(const json& j, Search& s) {
  j.at("lambda_cap").get_to(s.lambda_cap);
  j.at("examined").get_to(s.examined);
  j.at("found").get_to(s.found);
  j.at("certificate").get_to(s.certificate);
  j.at("certificate_lambda").get_to(s.certificate_lambda);
  j.at("certificate_properties").get_to(s.certificate_properties);
  j.at("verified").get_to(s.verified);
}

namespace {

template <typename T>
void put_optional(json& j, const char* name, const std::optional<T>& value) {
  if (value) {
    j[name] = *value;
  }
}

template <typename T>
void get_optional(const json& j, const char* name, std::optional<T>& value) {
  if (auto it = j.find(name); it != j.end()) {
    value = it->get<T>();
  } else {
    value.reset();
  }
}

}  // namespace

std::string emit_report(const Document& doc) {
  json j{{"command", doc.command},
         {"input", doc.input},
         {"declared_kind", doc.declared_kind},
         {"points", doc.points},
         {"options", doc.options},
         {"exit_code", doc.exit_code}};
  put_optional(j, "analysis", doc.analysis);
  put_optional(j, "metric_violations", doc.metric_violations);
  put_optional(j, "generalized_violations", doc.generalized_violations);
  put_optional(j, "fixed_points", doc.fixed_points);
  put_optional(j, "trajectory", doc.trajectory);
  put_optional(j, "bounds", doc.bounds);
  put_optional(j, "search", doc.search);
  return j.dump(2) + "\n";
}

Document parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("report: ") + e.what());
  }
  try {
    Document doc;
    j.at("command").get_to(doc.command);
    j.at("input").get_to(doc.input);
    j.at("declared_kind").get_to(doc.declared_kind);
    j.at("points").get_to(doc.points);
    j.at("options").get_to(doc.options);
    j.at("exit_code").get_to(doc.exit_code);
    get_optional(j, "analysis", doc.analysis);
    get_optional(j, "metric_violations", doc.metric_violations);
    get_optional(j, "generalized_violations", doc.generalized_violations);
    get_optional(j, "fixed_points", doc.fixed_points);
    get_optional(j, "trajectory", doc.trajectory);
    get_optional(j, "bounds", doc.bounds);
    get_optional(j, "search", doc.search);
    return doc;
  } catch (const json::exception& e) {
    throw DocumentError(std::string("report: ") + e.what());
  }
}

}  // namespace report

}  // namespace kannan
