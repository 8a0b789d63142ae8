// Command-line front end: loads space-definition documents, runs the
// validators, contraction analysis, Picard iteration and certificate search,
// and emits a human summary plus an optional machine-readable report.
//
// Exit codes: 0 success, 1 negative finding, 2 input error, 3 search budget
// exceeded.

#include <CLI11.hpp>

#include "kannan/contraction.hpp"
#include "kannan/document.hpp"
#include "kannan/iteration.hpp"
#include "kannan/maps.hpp"
#include "kannan/rational.hpp"
#include "kannan/space.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

using kannan::AuxiliaryMap;
using kannan::FiniteSpace;
using kannan::PointId;
using kannan::PointPair;
using kannan::Rational;

std::string kind_name(FiniteSpace::Kind kind) {
  return kind == FiniteSpace::Kind::Metric ? "metric" : "generalized";
}

std::string pair_text(const FiniteSpace& space, const PointPair& pair) {
  return "{" + space.label(pair.first) + ", " + space.label(pair.second) + "}";
}

std::string violation_line(const FiniteSpace& space,
                           const kannan::AxiomViolation& v) {
  using Axiom = kannan::AxiomViolation::Axiom;
  auto lbl = [&](std::size_t i) { return space.label(v.witness[i]); };
  switch (v.axiom) {
    case Axiom::IdentityOfIndiscernibles:
      if (v.witness[0] == v.witness[1]) {
        return "identity-of-indiscernibles: d(" + lbl(0) + "," + lbl(1) +
               ") = " + kannan::format_rational(v.lhs) + ", expected 0";
      }
      return "identity-of-indiscernibles: d(" + lbl(0) + "," + lbl(1) +
             ") = 0 for distinct points";
    case Axiom::Symmetry:
      return "symmetry: d(" + lbl(0) + "," + lbl(1) + ") and d(" + lbl(1) +
             "," + lbl(0) + ") differ (" + kannan::format_rational(v.lhs) +
             " vs " + kannan::format_rational(v.rhs) + ")";
    case Axiom::Triangle:
      return "triangle: d(" + lbl(0) + "," + lbl(2) + ") = " +
             kannan::format_rational(v.lhs) + " > d(" + lbl(0) + "," + lbl(1) +
             ") + d(" + lbl(1) + "," + lbl(2) + ") = " +
             kannan::format_rational(v.rhs);
    case Axiom::Rectangular:
      return "rectangular: d(" + lbl(0) + "," + lbl(3) + ") = " +
             kannan::format_rational(v.lhs) + " > d(" + lbl(0) + "," + lbl(1) +
             ") + d(" + lbl(1) + "," + lbl(2) + ") + d(" + lbl(2) + "," +
             lbl(3) + ") = " + kannan::format_rational(v.rhs);
    case Axiom::NonNegativity:
      return "non-negativity: d(" + lbl(0) + "," + lbl(1) + ") = " +
             kannan::format_rational(v.lhs) + " < 0";
  }
  return "unknown violation";
}

std::string lambda_text(const FiniteSpace& space,
                        const kannan::LambdaVerdict& verdict) {
  std::string out;
  if (verdict.infinite) {
    out = "infinite";
    if (verdict.argmax_pair) {
      out += " (pair " + pair_text(space, *verdict.argmax_pair) +
             " has positive numerator over zero denominator)";
    }
    out += " — not feasible";
    return out;
  }
  out = kannan::format_rational(verdict.lambda_min);
  if (verdict.argmax_pair) {
    out += ", argmax " + pair_text(space, *verdict.argmax_pair);
  }
  out += verdict.feasible_below_half ? " — feasible (< 1/2)"
                                     : " — not feasible (needs < 1/2)";
  return out;
}

std::string properties_text(const FiniteSpace& space,
                            const kannan::MapProperties& props) {
  std::string out = props.injectivity.injective ? "injective" : "not injective";
  if (props.injectivity.collision) {
    out += " (collision " + pair_text(space, *props.injectivity.collision) + ")";
  }
  out += "; continuous yes";
  out += std::string("; subsequentially convergent ") +
         kannan::trivalent_name(props.subsequentially_convergent.verdict) +
         " (" +
         kannan::rationale_name(props.subsequentially_convergent.rationale) +
         ")";
  out += std::string("; sequentially convergent ") +
         kannan::trivalent_name(props.sequentially_convergent.verdict) + " (" +
         kannan::rationale_name(props.sequentially_convergent.rationale) + ")";
  return out;
}

std::string theorem_text(const kannan::TheoremCheck& check) {
  if (check.applies) {
    return "applies";
  }
  std::string out = "does not apply — failed:";
  for (const kannan::Hypothesis h : check.failed) {
    out += std::string(" ") + kannan::hypothesis_name(h);
  }
  return out;
}

void print_space_header(const kannan::LoadedDocument& doc,
                        const std::string& path) {
  std::cout << "space: " << path << " — " << doc.space.size()
            << " points, declared " << kind_name(doc.declared_kind) << "\n";
}

bool write_report(const kannan::report::Document& doc,
                  const std::string& path) {
  if (path.empty()) {
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write report to " << path << "\n";
    return false;
  }
  out << kannan::report::emit_report(doc);
  return true;
}

struct CommonArgs {
  std::string file;
  std::string report_path;
};

kannan::report::Document base_report(const std::string& command,
                                     const CommonArgs& args,
                                     const kannan::LoadedDocument& doc) {
  kannan::report::Document out;
  out.command = command;
  out.input = args.file;
  out.declared_kind = kind_name(doc.declared_kind);
  out.points = doc.space.labels();
  return out;
}

int cmd_validate(const CommonArgs& args) {
  const kannan::LoadedDocument doc = kannan::load_space_document(args.file);
  print_space_header(doc, args.file);

  const bool metric = doc.declared_kind == FiniteSpace::Kind::Metric;
  const std::vector<kannan::AxiomViolation> violations =
      metric ? kannan::validate_metric(doc.space)
             : kannan::validate_generalized_metric(doc.space);

  kannan::report::Document rep = base_report("validate", args, doc);
  std::vector<kannan::report::Violation> entries;
  for (const auto& v : violations) {
    entries.push_back(kannan::report::make_violation(doc.space, v));
  }
  if (metric) {
    rep.metric_violations = entries;
  } else {
    rep.generalized_violations = entries;
  }

  if (violations.empty()) {
    std::cout << kind_name(doc.declared_kind) << " axioms: ok\n";
  } else {
    std::cout << kind_name(doc.declared_kind) << " axioms: "
              << violations.size() << " violation"
              << (violations.size() == 1 ? "" : "s") << "\n";
    for (const auto& v : violations) {
      std::cout << "  " << violation_line(doc.space, v) << "\n";
    }
  }

  rep.exit_code = violations.empty() ? kExitOk : kExitNegative;
  if (!write_report(rep, args.report_path)) {
    return kExitInput;
  }
  return rep.exit_code;
}

struct AnalyzeArgs {
  CommonArgs common;
  std::string map_name;
  std::string aux_name;
  bool exclude_clamp = false;
};

int cmd_analyze(const AnalyzeArgs& args) {
  const kannan::LoadedDocument doc =
      kannan::load_space_document(args.common.file);
  const kannan::FiniteSelfMap* self_map = doc.find_map(args.map_name);
  if (self_map == nullptr) {
    std::cerr << "error: unknown map \"" << args.map_name << "\"\n";
    return kExitInput;
  }
  AuxiliaryMap aux = AuxiliaryMap::identity();
  if (!args.aux_name.empty()) {
    auto found = doc.find_aux(args.aux_name);
    if (!found) {
      std::cerr << "error: unknown auxiliary map \"" << args.aux_name << "\"\n";
      return kExitInput;
    }
    aux = std::move(*found);
  }

  kannan::AnalyzeOptions options;
  if (args.exclude_clamp) {
    options.excluded = doc.clamp_pairs();
  }

  const kannan::AnalysisReport analysis =
      kannan::analyze(doc.space, *self_map, aux, options);

  print_space_header(doc, args.common.file);
  std::cout << "metric axioms: "
            << (analysis.metric_violations.empty()
                    ? "ok"
                    : std::to_string(analysis.metric_violations.size()) +
                          " violation(s)")
            << "\n";
  std::cout << "generalized axioms: "
            << (analysis.generalized_violations.empty()
                    ? "ok"
                    : std::to_string(analysis.generalized_violations.size()) +
                          " violation(s)")
            << "\n";
  if (!options.excluded.empty()) {
    std::cout << "excluded pairs: " << options.excluded.size()
              << " (truncation clamp)\n";
  }
  std::cout << "classical constant (map " << args.map_name
            << "): " << lambda_text(doc.space, analysis.classical) << "\n";
  const std::string aux_label =
      analysis.aux_is_identity ? "identity" : args.aux_name;
  std::cout << "extended constant (aux " << aux_label
            << "): " << lambda_text(doc.space, analysis.extended) << "\n";
  std::cout << "aux " << aux_label << ": "
            << properties_text(doc.space, analysis.aux_properties) << "\n";
  std::cout << "theorem (metric): " << theorem_text(analysis.metric_theorem)
            << "\n";
  std::cout << "theorem (generalized): "
            << theorem_text(analysis.generalized_theorem) << "\n";

  kannan::report::Document rep = base_report("analyze", args.common, doc);
  rep.options["map"] = args.map_name;
  if (!args.aux_name.empty()) {
    rep.options["aux"] = args.aux_name;
  }
  if (args.exclude_clamp) {
    rep.options["exclude_clamp"] = "true";
  }
  rep.analysis = kannan::report::make_analysis(doc.space, analysis);

  const bool applies =
      analysis.metric_theorem.applies || analysis.generalized_theorem.applies;
  if (applies) {
    const auto fixed = kannan::fixed_points_exhaustive(doc.space, *self_map);
    std::vector<kannan::report::FixedPointEntry> entries;
    std::cout << "fixed points (exhaustive):";
    for (const auto& cert : fixed) {
      entries.push_back(kannan::report::make_fixed_point(doc.space, cert));
      std::cout << " " << doc.space.label(cert.point);
    }
    std::cout << (fixed.size() == 1 ? " (unique)" : "") << "\n";
    rep.fixed_points = std::move(entries);
  }

  rep.exit_code = applies ? kExitOk : kExitNegative;
  if (!write_report(rep, args.common.report_path)) {
    return kExitInput;
  }
  return rep.exit_code;
}

struct SolveArgs {
  CommonArgs common;
  std::string map_name;
  std::string aux_name;
  std::string start;
  std::uint64_t max_iter = 1000;
  std::string check_bounds;  // rational text, empty = no bound check
};

int cmd_solve(const SolveArgs& args) {
  const kannan::LoadedDocument doc =
      kannan::load_space_document(args.common.file);
  const kannan::FiniteSelfMap* self_map = doc.find_map(args.map_name);
  if (self_map == nullptr) {
    std::cerr << "error: unknown map \"" << args.map_name << "\"\n";
    return kExitInput;
  }
  std::optional<AuxiliaryMap> aux;
  if (!args.aux_name.empty()) {
    aux = doc.find_aux(args.aux_name);
    if (!aux) {
      std::cerr << "error: unknown auxiliary map \"" << args.aux_name << "\"\n";
      return kExitInput;
    }
  }
  const std::optional<PointId> start = doc.space.find(args.start);
  if (!start) {
    std::cerr << "error: unknown start point \"" << args.start << "\"\n";
    return kExitInput;
  }
  std::optional<Rational> lambda;
  if (!args.check_bounds.empty()) {
    lambda = kannan::parse_rational(args.check_bounds);
    if (!lambda) {
      std::cerr << "error: bad rational for --check-bounds: \""
                << args.check_bounds << "\"\n";
      return kExitInput;
    }
  }

  kannan::Trajectory traj =
      kannan::picard(doc.space, *self_map, *start, args.max_iter,
                     aux ? &*aux : nullptr);

  print_space_header(doc, args.common.file);
  std::cout << "trajectory (map " << args.map_name << ") from " << args.start
            << ":";
  for (const PointId p : traj.points) {
    std::cout << (p == traj.points.front() ? " " : " -> ")
              << doc.space.label(p);
  }
  std::cout << "\n";

  bool reached_fixed = false;
  switch (traj.termination) {
    case kannan::Trajectory::Termination::FixedPoint:
      reached_fixed = true;
      std::cout << "terminated: fixed point "
                << doc.space.label(*traj.fixed_point) << " after "
                << traj.steps() << " step" << (traj.steps() == 1 ? "" : "s")
                << "\n";
      if (doc.clamp_point && *traj.fixed_point == *doc.clamp_point) {
        std::cout << "note: fixed point is the truncation boundary of the "
                     "realized family\n";
      }
      break;
    case kannan::Trajectory::Termination::CycleDetected: {
      std::cout << "terminated: cycle detected:";
      for (const PointId p : traj.cycle) {
        std::cout << (p == traj.cycle.front() ? " " : " -> ")
                  << doc.space.label(p);
      }
      std::cout << "\n";
      break;
    }
    case kannan::Trajectory::Termination::MaxIterReached:
      std::cout << "terminated: iteration cap reached after " << traj.steps()
                << " steps\n";
      break;
  }

  std::optional<kannan::BoundReport> bounds;
  if (lambda) {
    const AuxiliaryMap bound_aux = aux ? *aux : AuxiliaryMap::identity();
    bounds = kannan::verify_bounds(doc.space, traj, bound_aux, *lambda);
    traj.lambda_used = *lambda;
    std::cout << "bounds at lambda = " << kannan::format_rational(*lambda)
              << " (decay " << kannan::format_rational(bounds->decay)
              << "): " << bounds->steps.size() << " step records, "
              << bounds->tails.size() << " tail records — "
              << (bounds->all_hold ? "all hold" : "VIOLATED") << "\n";
    if (!bounds->all_hold) {
      for (const auto& s : bounds->steps) {
        if (!s.one_step_holds || !s.geometric_holds) {
          std::cout << "  step " << s.index << ": gap "
                    << kannan::format_rational(s.gap) << " exceeds bound\n";
        }
      }
      for (const auto& t : bounds->tails) {
        if (!t.holds) {
          std::cout << "  tail (" << t.later << "," << t.earlier
                    << "): distance " << kannan::format_rational(t.distance)
                    << " > " << kannan::format_rational(t.bound) << "\n";
        }
      }
    }
  }

  kannan::report::Document rep = base_report("solve", args.common, doc);
  rep.options["map"] = args.map_name;
  if (!args.aux_name.empty()) {
    rep.options["aux"] = args.aux_name;
  }
  rep.options["start"] = args.start;
  rep.options["max_iter"] = std::to_string(args.max_iter);
  if (lambda) {
    rep.options["check_bounds"] = kannan::format_rational(*lambda);
  }
  rep.trajectory =
      kannan::report::make_trajectory(doc.space, traj, doc.clamp_point);
  if (bounds) {
    rep.bounds = kannan::report::make_bounds(*bounds);
  }

  const bool ok = reached_fixed && (!bounds || bounds->all_hold);
  rep.exit_code = ok ? kExitOk : kExitNegative;
  if (!write_report(rep, args.common.report_path)) {
    return kExitInput;
  }
  return rep.exit_code;
}

struct SearchArgs {
  CommonArgs common;
  std::string map_name;
  std::string lambda_cap;
  std::vector<std::string> verify;
  std::uint64_t max_points = 10;
};

int cmd_search_t(const SearchArgs& args) {
  const kannan::LoadedDocument doc =
      kannan::load_space_document(args.common.file);
  const kannan::FiniteSelfMap* self_map = doc.find_map(args.map_name);
  if (self_map == nullptr) {
    std::cerr << "error: unknown map \"" << args.map_name << "\"\n";
    return kExitInput;
  }
  const auto cap = kannan::parse_rational(args.lambda_cap);
  if (!cap) {
    std::cerr << "error: bad rational for --lambda-cap: \"" << args.lambda_cap
              << "\"\n";
    return kExitInput;
  }

  print_space_header(doc, args.common.file);

  kannan::report::Document rep = base_report("search-t", args.common, doc);
  rep.options["map"] = args.map_name;
  rep.options["lambda_cap"] = kannan::format_rational(*cap);
  rep.options["max_points"] = std::to_string(args.max_points);

  kannan::SearchOptions options;
  options.lambda_cap = *cap;
  options.max_points = args.max_points;

  kannan::SearchOutcome outcome;
  try {
    outcome = kannan::search_certificate(doc.space, *self_map, options);
  } catch (const kannan::SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    rep.exit_code = kExitBudget;
    write_report(rep, args.common.report_path);
    return kExitBudget;
  }

  kannan::report::Search search;
  search.lambda_cap = kannan::format_rational(*cap);
  search.examined = outcome.examined;
  search.found = outcome.certificate.has_value();

  std::cout << "search (map " << args.map_name << ", cap "
            << kannan::format_rational(*cap) << "): examined "
            << outcome.examined << " injective tables\n";
  if (outcome.certificate) {
    const kannan::Certificate& cert = *outcome.certificate;
    std::cout << "certificate:";
    for (std::uint32_t i = 0; i < doc.space.size(); ++i) {
      const std::string& from = doc.space.label(PointId{i});
      const std::string& to = doc.space.label(cert.aux(PointId{i}));
      std::cout << (i == 0 ? " " : ", ") << from << " -> " << to;
      search.certificate[from] = to;
    }
    std::cout << "  (lambda = " << kannan::format_rational(cert.lambda)
              << ")\n";
    search.certificate_lambda = kannan::format_rational(cert.lambda);
    search.certificate_properties =
        kannan::report::make_properties(doc.space, cert.properties);
  } else {
    std::cout << "no certificate at cap " << kannan::format_rational(*cap)
              << "\n";
  }

  for (const std::string& name : args.verify) {
    const kannan::FiniteSelfMap* candidate = doc.find_map(name);
    if (candidate == nullptr) {
      std::cerr << "error: unknown map \"" << name << "\" in --verify\n";
      return kExitInput;
    }
    const kannan::LambdaVerdict verdict = kannan::t_kannan_lambda(
        doc.space, *self_map, AuxiliaryMap::from_table(*candidate));
    kannan::report::CandidateCheck check;
    check.name = name;
    check.valid = !verdict.infinite && verdict.lambda_min <= *cap;
    if (!verdict.infinite) {
      check.lambda = kannan::format_rational(verdict.lambda_min);
    }
    std::cout << "candidate " << name << ": "
              << (check.valid ? "valid certificate" : "not a certificate");
    if (!verdict.infinite) {
      std::cout << " (lambda = " << check.lambda << ")";
    } else {
      std::cout << " (no finite constant)";
    }
    std::cout << "\n";
    search.verified.push_back(std::move(check));
  }

  rep.search = std::move(search);
  rep.exit_code = outcome.certificate ? kExitOk : kExitNegative;
  if (!write_report(rep, args.common.report_path)) {
    return kExitInput;
  }
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact analysis of Kannan-type contraction conditions on finite metric "
      "and generalized (rectangular) metric spaces"};
  app.require_subcommand(1);

  CommonArgs validate_args;
  CLI::App* validate = app.add_subcommand(
      "validate", "Check the declared axioms of a space document");
  validate->add_option("file", validate_args.file, "space document")
      ->required();
  validate->add_option("--report", validate_args.report_path,
                       "write machine-readable report to this path");

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze",
      "Decide the classical and auxiliary contraction conditions and theorem "
      "applicability");
  analyze->add_option("file", analyze_args.common.file, "space document")
      ->required();
  analyze->add_option("--map", analyze_args.map_name, "self map to analyze")
      ->required();
  analyze->add_option("--aux", analyze_args.aux_name,
                      "auxiliary map (default: identity)");
  analyze->add_flag("--exclude-clamp", analyze_args.exclude_clamp,
                    "exclude pairs touching the family truncation boundary");
  analyze->add_option("--report", analyze_args.common.report_path,
                      "write machine-readable report to this path");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "Run Picard iteration and optionally check convergence bounds");
  solve->add_option("file", solve_args.common.file, "space document")
      ->required();
  solve->add_option("--map", solve_args.map_name, "self map to iterate")
      ->required();
  solve->add_option("--aux", solve_args.aux_name,
                    "auxiliary map for gaps and bounds");
  solve->add_option("--start", solve_args.start, "start point label")
      ->required();
  solve->add_option("--max-iter", solve_args.max_iter, "iteration cap")
      ->check(CLI::PositiveNumber);
  solve->add_option("--check-bounds", solve_args.check_bounds,
                    "verify convergence bounds at this lambda (rational)");
  solve->add_option("--report", solve_args.common.report_path,
                    "write machine-readable report to this path");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand(
      "search-t",
      "Exhaustively search injective auxiliary maps certifying the condition");
  search->add_option("file", search_args.common.file, "space document")
      ->required();
  search->add_option("--map", search_args.map_name, "self map to certify")
      ->required();
  search
      ->add_option("--lambda-cap", search_args.lambda_cap,
                   "largest acceptable constant (rational < 1/2)")
      ->required();
  search->add_option("--verify", search_args.verify,
                     "also check these declared maps as candidates");
  search->add_option("--max-points", search_args.max_points,
                     "refuse spaces larger than this (default 10)");
  search->add_option("--report", search_args.common.report_path,
                     "write machine-readable report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (validate->parsed()) {
      return cmd_validate(validate_args);
    }
    if (analyze->parsed()) {
      return cmd_analyze(analyze_args);
    }
    if (solve->parsed()) {
      return cmd_solve(solve_args);
    }
    if (search->parsed()) {
      return cmd_search_t(search_args);
    }
  } catch (const kannan::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const kannan::MalformedSpace& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const kannan::SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
