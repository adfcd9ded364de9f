// Copyright 2026 The systole Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "systole/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "systole/datasets.hpp"
#include "systole/deformation.hpp"
#include "systole/error.hpp"
#include "systole/fill.hpp"
#include "systole/flow.hpp"
#include "systole/homology.hpp"
#include "systole/maps.hpp"
#include "systole/rational.hpp"
#include "systole/verify.hpp"

namespace systole {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  bool json = false;
  bool permissive = false;
  std::size_t cycle_cap = CycleSearchOptions{}.cycle_cap;

  CycleSearchOptions search() const { return {.cycle_cap = cycle_cap}; }
  GraphMode mode() const { return permissive ? GraphMode::Permissive : GraphMode::OuterSpace; }
};

// A readable file, or else the name of a bundled dataset.
std::string read_input(const std::string& path) {
  if (std::filesystem::is_regular_file(path)) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in && !in.eof()) throw UsageError("cannot read '" + path + "'");
    return buffer.str();
  }
  const auto& names = dataset_names();
  if (std::find(names.begin(), names.end(), path) != names.end()) {
    return std::string(dataset_source(path));
  }
  throw UsageError("no such file or bundled dataset: '" + path + "'");
}

// ---------------------------------------------------------------- JSON pieces

std::string q(const Rational& r) { return to_fraction_string(r); }

json cycle_json(const MetricGraph& g, const Cycle& c) {
  return {{"steps", c.to_string()}, {"edges", c.edge_sequence()}, {"length", q(c.length(g))}};
}

json cycles_json(const MetricGraph& g, const std::vector<Cycle>& cycles) {
  json out = json::array();
  for (const Cycle& c : cycles) out.push_back(cycle_json(g, c));
  return out;
}

json graph_json(const MetricGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"length", q(e.length)}});
  }
  return {{"name", g.name()},     {"vertices", g.num_vertices()}, {"edges", edges},
          {"rank", g.rank()},     {"volume", q(g.volume())}};
}

json lattice_json(const LatticeVerdict& l) {
  json divisors = json::array();
  for (const Integer& d : l.divisors) divisors.push_back(d.get_str());
  return {{"rank", l.rank},
          {"ambient_rank", l.ambient_rank},
          {"divisors", divisors},
          {"index", l.index ? json(l.index->get_str()) : json("infinite")}};
}

json support_json(const MetricGraph& g, const SystoleSupport& s) {
  return {{"edges", s.edges},
          {"vertices", s.vertices},
          {"complement", s.complement},
          {"length", q(s.length)},
          {"betti", support_betti_number(g, s)}};
}

json event_json(const FlowEvent& e) {
  return {{"kind", std::string(to_string(e.kind))},
          {"u", q(e.u)},
          {"t_approx", std::log(to_double(e.u))},
          {"stage", e.stage},
          {"new_systoles", [&] {
             json out = json::array();
             for (const Cycle& c : e.new_systoles) out.push_back(c.to_string());
             return out;
           }()},
          {"contracted", e.contracted},
          {"systole_count", e.systoles.size()},
          {"systole_length", q(e.systole_length)},
          {"support_betti", e.support_betti},
          {"graph", graph_json(e.snapshot)},
          {"graph_text", serialize_graph(e.snapshot)}};
}

json trajectory_json(const Trajectory& t) {
  json events = json::array();
  for (const FlowEvent& e : t.events) events.push_back(event_json(e));
  const MetricGraph& final_graph = t.final_graph();
  return {{"command", "retract"},
          {"initial", graph_json(t.initial)},
          {"initial_systole_length", q(t.initial_systole_length)},
          {"initial_support_betti", t.initial_support_betti},
          {"events", events},
          {"final", graph_json(final_graph)},
          {"final_graph_text", serialize_graph(final_graph)},
          {"final_systole_length", q(t.final_systole_length())},
          {"final_systoles", cycles_json(final_graph, t.final_systoles())},
          {"geometrically_fills", geometrically_fills(final_graph, systole_support(final_graph, t.final_systoles()))}};
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string join(const auto& items, const char* sep = " ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : items) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

std::string divisors_text(const LatticeVerdict& l) {
  std::vector<std::string> parts;
  for (const Integer& d : l.divisors) parts.push_back(d.get_str());
  return parts.empty() ? "-" : join(parts);
}

// ---------------------------------------------------------------- commands

int cmd_analyze(const GlobalOptions& opt, const std::string& file, std::ostream& out) {
  const MetricGraph g = parse_graph(read_input(file), opt.mode());
  Membership m;
  if (opt.permissive) {
    check_mode(g, GraphMode::Permissive);
    m.systoles = all_systoles(g, opt.search());
    m.support = systole_support(g, m.systoles);
    m.systole_length = m.support.length == 0 ? Rational(0) : m.systoles.front().length(g);
    m.lattice = cycle_lattice(g, m.systoles);
    m.in_W = m.lattice.rank == static_cast<std::size_t>(g.rank());
    m.in_V = topologically_fills(g, m.support);
    m.in_Vprime = geometrically_fills(g, m.support);
  } else {
    m = classify_membership(g, opt.search());
  }
  const long betti = support_betti_number(g, m.support);
  if (opt.json) {
    json report = {{"command", "analyze"},
                   {"graph", graph_json(g)},
                   {"systole_length", q(m.systole_length)},
                   {"systole_length_approx", to_double(m.systole_length)},
                   {"systoles", cycles_json(g, m.systoles)},
                   {"support", support_json(g, m.support)},
                   {"lattice", lattice_json(m.lattice)},
                   {"membership", {{"W", m.in_W}, {"V", m.in_V}, {"V_prime", m.in_Vprime}}}};
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  out << "graph " << g.name() << ": V=" << g.num_vertices() << " E=" << g.num_edges()
      << " rank " << g.rank() << " volume " << q(g.volume()) << "\n";
  out << "systole length " << q(m.systole_length) << " (" << m.systoles.size() << " systoles)\n";
  for (const Cycle& c : m.systoles) out << "  " << c.to_string() << "\n";
  out << "support: edges " << join(m.support.edges) << "; length " << q(m.support.length)
      << "; betti " << betti << "\n";
  out << "lattice: rank " << m.lattice.rank << " of " << m.lattice.ambient_rank << "; divisors "
      << divisors_text(m.lattice) << "; index "
      << (m.lattice.index ? m.lattice.index->get_str() : std::string("infinite")) << "\n";
  out << "membership: W " << yn(m.in_W) << ", V " << yn(m.in_V) << ", V' " << yn(m.in_Vprime)
      << "\n";
  return kExitOk;
}

int cmd_dimension(const GlobalOptions& opt, const std::string& file, std::ostream& out) {
  const MetricGraph g = parse_graph(read_input(file), opt.mode());
  const DeformationDimension d = local_deformation_dimension(g, opt.search());
  const VcdWitness w = vcd_witness(g, d);
  if (opt.json) {
    json report = {{"command", "dimension"},
                   {"graph", graph_json(g)},
                   {"edges", d.edges},
                   {"systoles", d.systoles},
                   {"rank_difference", d.rank_difference},
                   {"dimension", d.dimension},
                   {"lower_bound", d.lower_bound},
                   {"positive_direction", d.positive_direction},
                   {"gap", d.gap ? json(q(*d.gap)) : json(nullptr)},
                   {"vcd", w.vcd},
                   {"exceeds", w.exceeds}};
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  out << "graph " << g.name() << ": E=" << d.edges << " systoles F=" << d.systoles
      << " rank n=" << g.rank() << "\n";
  out << "difference rank " << d.rank_difference << "; dimension " << d.dimension
      << " (lower bound E-F = " << d.lower_bound << ")\n";
  out << "positive direction " << yn(d.positive_direction) << "; gap to next cycle "
      << (d.gap ? q(*d.gap) : std::string("none")) << "\n";
  out << "vcd 2n-3 = " << w.vcd << "; exceeds " << yn(w.exceeds) << "\n";
  return kExitOk;
}

void write_trajectory_text(const Trajectory& t, std::ostream& out) {
  out << "graph " << t.initial.name() << ": systole length " << q(t.initial_systole_length)
      << "\n";
  if (t.events.empty()) out << "already geometrically filling; no events\n";
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    const FlowEvent& e = t.events[i];
    out << "event " << i + 1 << ": " << to_string(e.kind) << " stage " << e.stage << " u "
        << q(e.u) << " (t ~ " << std::log(to_double(e.u)) << "); systole length "
        << q(e.systole_length) << "; support betti " << e.support_betti << "\n";
    for (const Cycle& c : e.new_systoles) out << "  new systole " << c.to_string() << "\n";
    if (!e.contracted.empty()) out << "  contracted edges " << join(e.contracted) << "\n";
  }
  out << "final graph:\n" << serialize_graph(t.final_graph());
}

int cmd_retract(const GlobalOptions& opt, const std::string& file, const std::string& trace,
                std::optional<std::size_t> max_events, std::optional<std::size_t> max_contractions,
                std::ostream& out) {
  const MetricGraph g = parse_graph(read_input(file), opt.mode());
  FlowLimits limits;
  limits.max_events_per_stage = max_events;
  limits.max_contractions = max_contractions;
  limits.search = opt.search();
  const Trajectory t = retract_to_spine(g, limits);
  const json report = trajectory_json(t);
  if (!trace.empty()) {
    std::ofstream file_out(trace, std::ios::binary);
    if (!file_out) throw UsageError("cannot write trace file '" + trace + "'");
    file_out << report.dump(2) << "\n";
  }
  if (opt.json) {
    out << report.dump(2) << "\n";
  } else {
    write_trajectory_text(t, out);
  }
  return kExitOk;
}

int cmd_map_check(const GlobalOptions& opt, const std::string& file, std::ostream& out) {
  const CombinatorialMap m = parse_map(read_input(file));
  const MetricGraph& g = m.graph();
  const FaceTrace trace = trace_faces(m);
  const MapType type = map_type_check(m);
  const FlagTransitivity flags = flag_transitivity(m);

  json report = {{"command", "map-check"},
                 {"map", g.name()},
                 {"V", g.num_vertices()},
                 {"E", g.num_edges()},
                 {"F", trace.faces.size()},
                 {"euler_characteristic", trace.euler_characteristic},
                 {"orientable", trace.orientable},
                 {"genus", trace.genus},
                 {"all_faces_embedded", trace.all_embedded}};
  json face_lengths = json::object(), degrees = json::object();
  for (auto [len, count] : type.face_lengths) face_lengths[std::to_string(len)] = count;
  for (auto [deg, count] : type.vertex_degrees) degrees[std::to_string(deg)] = count;
  report["type"] = {{"p", type.p}, {"q", type.q}, {"uniform", type.uniform},
                    {"face_lengths", face_lengths}, {"vertex_degrees", degrees}};
  report["flag_transitivity"] = {{"transitive", flags.transitive},
                                 {"aut_order", flags.aut_order},
                                 {"flags", flags.flags},
                                 {"vertex_transitive", flags.vertex_transitive},
                                 {"face_transitive", flags.face_transitive}};
  std::optional<EulerRelations> euler;
  if (type.uniform && type.q == 3) euler = euler_relations(m);
  report["euler_relations"] =
      euler ? json{{"V", euler->V}, {"E", euler->E}, {"F", euler->F}, {"p", euler->p},
                   {"n", euler->n}, {"vertex_edge", euler->vertex_edge},
                   {"edge_face", euler->edge_face}, {"rank_formula", euler->rank_formula},
                   {"face_count", euler->face_count}, {"all", euler->all()}}
            : json(nullptr);
  std::optional<FaceSystoleCheck> sef;
  if (type.uniform) sef = systoles_equal_faces(m, opt.search());
  if (sef) {
    json extra = json::array();
    for (const Cycle& c : sef->extra_min_cycles) extra.push_back(c.to_string());
    report["systoles_equal_faces"] = {{"girth", sef->girth},
                                      {"face_length", sef->face_length},
                                      {"face_count", sef->face_count},
                                      {"girth_cycle_count", sef->girth_cycle_count},
                                      {"equal", sef->equal},
                                      {"extra_min_cycles", extra}};
  } else {
    report["systoles_equal_faces"] = nullptr;
  }

  if (opt.json) {
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  out << "map " << g.name() << ": V=" << g.num_vertices() << " E=" << g.num_edges()
      << " F=" << trace.faces.size() << " chi=" << trace.euler_characteristic << " "
      << (trace.orientable ? "orientable genus " : "non-orientable genus ") << trace.genus
      << "\n";
  if (type.uniform) {
    out << "type {" << type.p << "," << type.q << "}\n";
  } else {
    out << "not uniform; face lengths";
    for (auto [len, count] : type.face_lengths) out << " " << len << "x" << count;
    out << "; degrees";
    for (auto [deg, count] : type.vertex_degrees) out << " " << deg << "x" << count;
    out << "\n";
  }
  out << "faces embedded: " << yn(trace.all_embedded) << "\n";
  out << "automorphisms " << flags.aut_order << " of " << flags.flags
      << " flags; flag-transitive " << yn(flags.transitive) << "\n";
  if (euler) {
    out << "3V=2E=pF " << yn(euler->vertex_edge && euler->edge_face) << "; n=1+V/2 "
        << yn(euler->rank_formula) << " (n=" << euler->n << "); F=(6/p)(n-1) "
        << yn(euler->face_count) << "\n";
  }
  if (sef) {
    out << "girth " << sef->girth << "; " << sef->girth_cycle_count << " girth cycles, "
        << sef->face_count << " faces; systoles equal faces " << yn(sef->equal) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const GlobalOptions& opt, const std::string& filter, std::ostream& out) {
  const auto results = run_verification(filter, opt.search());
  if (results.empty()) throw UsageError("--filter '" + filter + "' matches no check");
  std::size_t failed = 0, passed = 0, conditional = 0;
  for (const auto& r : results) {
    if (r.status == CheckStatus::Fail) ++failed;
    if (r.status == CheckStatus::Pass) ++passed;
    if (r.status == CheckStatus::Conditional) ++conditional;
  }
  if (opt.json) {
    json checks = json::array();
    for (const auto& r : results) {
      checks.push_back({{"name", r.name},
                        {"status", std::string(to_string(r.status))},
                        {"summary", r.summary},
                        {"details", r.details}});
    }
    json report = {{"command", "verify-paper"}, {"checks", checks},     {"passed", passed},
                   {"failed", failed},          {"conditional", conditional}};
    out << report.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << std::left << std::setw(12) << to_string(r.status) << std::setw(24) << r.name
          << r.summary << "\n";
      for (const auto& d : r.details) out << "    " << d << "\n";
    }
    out << passed << " passed, " << failed << " failed, " << conditional << " conditional\n";
  }
  return failed == 0 ? kExitOk : kExitDomainError;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Systoles, fill predicates and spine retraction on metric graphs", "systole"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions opt;
  app.add_flag("--json", opt.json, "Write a machine-readable JSON report");
  app.add_flag("--permissive", opt.permissive, "Allow vertices of degree 1 and 2");
  app.add_option("--cycle-cap", opt.cycle_cap, "Abort cycle enumeration beyond N cycles")
      ->check(CLI::PositiveNumber);

  std::string file, trace, filter;
  std::optional<std::size_t> max_events, max_contractions;

  auto* analyze = app.add_subcommand("analyze", "Systoles, lattice and W/V/V' membership");
  analyze->add_option("FILE", file, "Graph file or bundled dataset name")->required();
  auto* retract = app.add_subcommand("retract", "Run the retraction flow to a filling graph");
  retract->add_option("FILE", file, "Graph file or bundled dataset name")->required();
  retract->add_option("--trace", trace, "Write the trajectory as JSON to this file");
  retract->add_option("--max-events", max_events, "Event cap per stage")->check(CLI::PositiveNumber);
  retract->add_option("--max-contractions", max_contractions, "Contraction cap")
      ->check(CLI::NonNegativeNumber);
  auto* dimension = app.add_subcommand("dimension", "Local dimension of the equal-systole locus");
  dimension->add_option("FILE", file, "Graph file or bundled dataset name")->required();
  auto* map_check = app.add_subcommand("map-check", "Faces, type, symmetry and systoles of a map");
  map_check->add_option("FILE", file, "Map file or bundled dataset name")->required();
  auto* verify = app.add_subcommand("verify-paper", "Run the bundled verification suite");
  verify->add_option("--filter", filter, "Only run checks whose name contains NAME");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n" << "run 'systole --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opt, file, out);
    if (retract->parsed()) return cmd_retract(opt, file, trace, max_events, max_contractions, out);
    if (dimension->parsed()) return cmd_dimension(opt, file, out);
    if (map_check->parsed()) return cmd_map_check(opt, file, out);
    if (verify->parsed()) return cmd_verify(opt, filter, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    json error = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (const auto* cap = dynamic_cast<const CapExceededError*>(&e)) {
      error["partial"] = trajectory_json(cap->partial());
    }
    if (opt.json) out << json{{"error", error}}.dump(2) << "\n";
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace systole
