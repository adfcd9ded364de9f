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

#include "systole/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "systole/datasets.hpp"
#include "systole/deformation.hpp"
#include "systole/error.hpp"
#include "systole/fill.hpp"
#include "systole/flow.hpp"
#include "systole/homology.hpp"
#include "systole/maps.hpp"
#include "systole/rational.hpp"

namespace systole {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Conditional: return "CONDITIONAL";
  }
  return "?";
}

namespace {

// Collects expectations for one check; any miss turns the result into a Fail.
class Checker {
 public:
  explicit Checker(CheckResult& result) : result_(result) {}

  bool expect(bool ok, const std::string& what) {
    result_.details.push_back((ok ? "ok   " : "MISS ") + what);
    if (!ok) failed_ = true;
    return ok;
  }
  void note(const std::string& what) { result_.details.push_back("     " + what); }
  bool failed() const { return failed_; }

 private:
  CheckResult& result_;
  bool failed_ = false;
};

std::string yn(bool b) { return b ? "yes" : "no"; }
std::string q(const Rational& r) { return to_fraction_string(r); }

MetricGraph graph_dataset(const std::string& name) {
  return std::get<MetricGraph>(bundled_dataset(name));
}
CombinatorialMap map_dataset(const std::string& name) {
  return std::get<CombinatorialMap>(bundled_dataset(name));
}

MetricGraph rose_half_half() {
  return parse_graph("graph rose\nvertices 1\nedge 0 0 0 1/2\nedge 1 0 0 1/2\n");
}

FlowLimits search_limits(const CycleSearchOptions& options) {
  FlowLimits limits;
  limits.search = options;
  return limits;
}

const char* kThetaLong =
    "graph theta_long\nvertices 2\nedge 0 0 1 1/2\nedge 1 0 1 1/4\nedge 2 0 1 1/4\n";

struct CheckDef {
  std::string name;
  std::function<void(Checker&, CheckResult&, const CycleSearchOptions&)> body;
};

void membership_check(Checker& c, const std::string& dataset, bool w, bool v, bool vp,
                      const CycleSearchOptions& options) {
  const Membership m = classify_membership(graph_dataset(dataset), options);
  c.expect(m.in_W == w && m.in_V == v && m.in_Vprime == vp,
           dataset + ": (W,V,V') = (" + yn(m.in_W) + "," + yn(m.in_V) + "," + yn(m.in_Vprime) +
               "), expected (" + yn(w) + "," + yn(v) + "," + yn(vp) + ")");
}

void describe_trajectory(Checker& c, const Trajectory& t) {
  for (const FlowEvent& e : t.events) {
    c.note(std::string(to_string(e.kind)) + " at u = " + q(e.u) + ", systole length " +
           q(e.systole_length));
  }
}

const std::vector<CheckDef>& checks() {
  static const std::vector<CheckDef> defs = {
      {"rank2-membership",
       [](Checker& c, CheckResult& r, const CycleSearchOptions& o) {
         r.summary = "W/V/V' membership of the rank-2 examples";
         membership_check(c, "theta", true, true, true, o);
         membership_check(c, "dumbbell_equal", true, true, false, o);
         membership_check(c, "dumbbell_unequal", false, false, false, o);
         membership_check(c, "rose2", true, true, true, o);
       }},
      {"theta-lattice",
       [](Checker& c, CheckResult& r, const CycleSearchOptions& o) {
         r.summary = "equilateral theta: 3 systoles of length 2/3, index 1, dimension 0";
         const MetricGraph g = graph_dataset("theta");
         const auto systoles = all_systoles(g, o);
         c.expect(systoles.size() == 3, std::to_string(systoles.size()) + " systoles");
         c.expect(systoles.front().length(g) == Rational(2, 3),
                  "systole length " + q(systoles.front().length(g)));
         const auto lattice = systole_lattice(g, o);
         c.expect(lattice.rank == 2 && lattice.index == Integer(1), "lattice rank 2, index 1");
         const auto dim = local_deformation_dimension(g, o);
         const auto vcd = vcd_witness(g, dim);
         c.expect(dim.dimension == 0 && vcd.vcd == 1 && !vcd.exceeds, "dim 0, vcd 1");
       }},
      {"flow-dumbbell-equal",
       [](Checker& c, CheckResult& r, const CycleSearchOptions& o) {
         r.summary = "dumbbell (1/3,1/3; bar 1/3) retracts to rose(1/2,1/2) at u = 3/2";
         const auto t = retract_to_spine(graph_dataset("dumbbell_equal"), search_limits(o));
         describe_trajectory(c, t);
         c.expect(t.events.size() == 1 && t.events[0].kind == EventKind::StageComplete &&
                      t.events[0].u == Rational(3, 2),
                  "one StageComplete event at u = 3/2");
         c.expect(are_isomorphic(t.final_graph(), rose_half_half()).has_value(),
                  "final graph is rose(1/2,1/2)");
         c.expect(t.initial_systole_length == Rational(1, 3) &&
                      t.final_systole_length() == Rational(1, 2),
                  "systole length 1/3 -> 1/2");
       }},
      {"flow-dumbbell-unequal",
       [](Checker& c, CheckResult& r, const CycleSearchOptions& o) {
         r.summary = "dumbbell (1/4,5/12; bar 1/3): event at u = 10/7, then collapse";
         const auto t = retract_to_spine(graph_dataset("dumbbell_unequal"), search_limits(o));
         describe_trajectory(c, t);
         c.expect(t.events.size() == 2, std::to_string(t.events.size()) + " events");
         if (t.events.size() == 2) {
           c.expect(t.events[0].kind == EventKind::NewSystoles && t.events[0].u == Rational(10, 7) &&
                        t.events[0].new_systoles.size() == 1,
                    "first event NewSystoles at u = 10/7 adding the long loop");
           c.expect(t.events[1].kind == EventKind::StageComplete, "second event StageComplete");
         }
         c.expect(are_isomorphic(t.final_graph(), rose_half_half()).has_value(),
                  "final graph is rose(1/2,1/2)");
       }},
      {"flow-theta",
       [](Checker& c, CheckResult& r, const CycleSearchOptions& o) {
         r.summary = "theta (1/2,1/4,1/4) reaches the equilateral theta at u = 4/3";
         const auto t = retract_to_spine(parse_graph(kThetaLong), search_limits(o));
         describe_trajectory(c, t);
         c.expect(t.events.size() == 1 && t.events[0].kind == EventKind::NewSystoles &&
                      t.events[0].u == Rational(4, 3),
                  "single NewSystoles event at u = 4/3");
         c.expect(are_isomorphic(t.final_graph(), graph_dataset("theta")).has_value(),
                  "final graph is the equilateral theta");
       }},
      {"k4-dimension",
       [](Checker& c, CheckResult& r, const CycleSearchOptions& o) {
         r.summary = "equilateral K4: 4 triangle systoles, dimension 2 < vcd 3";
         const MetricGraph g = normalize_volume(map_dataset("tetrahedron").skeleton());
         const Membership m = classify_membership(g, o);
         c.expect(m.systoles.size() == 4 && m.systole_length == Rational(1, 2),
                  std::to_string(m.systoles.size()) + " systoles of length " +
                      q(m.systole_length));
         c.expect(m.in_W && m.lattice.index == Integer(1), "well-rounded, index 1");
         c.expect(m.in_Vprime, "geometrically fills");
         const auto dim = local_deformation_dimension(g, o);
         const auto vcd = vcd_witness(g, dim);
         c.expect(dim.edges == 6 && dim.systoles == 4 && dim.dimension == 2 && vcd.vcd == 3 &&
                      !vcd.exceeds,
                  "E=6, F=4, dim=" + std::to_string(dim.dimension) + ", vcd=" +
                      std::to_string(vcd.vcd));
       }},
      {"map-euler",
       [](Checker& c, CheckResult& r, const CycleSearchOptions&) {
         r.summary = "3V = 2E = pF, n = 1 + V/2, F = (6/p)(n-1) on every cubic map";
         for (const auto& name : dataset_names()) {
           const auto d = bundled_dataset(name);
           const auto* m = std::get_if<CombinatorialMap>(&d);
           if (m == nullptr) continue;
           const auto e = euler_relations(*m);
           c.expect(e.all(), name + ": V=" + std::to_string(e.V) + " E=" + std::to_string(e.E) +
                                 " F=" + std::to_string(e.F) + " p=" + std::to_string(e.p) +
                                 " n=" + std::to_string(e.n));
         }
       }},
      {"map-flags",
       [](Checker& c, CheckResult& r, const CycleSearchOptions&) {
         r.summary = "tetrahedron and cube are flag-transitive (24 and 48 automorphisms)";
         const auto tet = flag_transitivity(map_dataset("tetrahedron"));
         const auto cube = flag_transitivity(map_dataset("cube"));
         c.expect(tet.transitive && tet.aut_order == 24,
                  "tetrahedron aut_order " + std::to_string(tet.aut_order));
         c.expect(cube.transitive && cube.aut_order == 48,
                  "cube aut_order " + std::to_string(cube.aut_order));
       }},
      {"map-systoles-faces",
       [](Checker& c, CheckResult& r, const CycleSearchOptions& o) {
         r.summary = "girth cycles equal face boundaries exactly for tetrahedron and cube";
         const std::vector<std::pair<std::string, bool>> expected = {
             {"tetrahedron", true}, {"cube", true}, {"heawood_torus", false},
             {"petersen_projective", false}};
         for (const auto& [name, equal] : expected) {
           const auto s = systoles_equal_faces(map_dataset(name), o);
           c.expect(s.equal == equal &&
                        (equal ? s.girth_cycle_count == s.face_count
                               : s.girth_cycle_count > s.face_count),
                    name + ": girth " + std::to_string(s.girth) + ", " +
                        std::to_string(s.girth_cycle_count) + " girth cycles, " +
                        std::to_string(s.face_count) + " faces");
         }
       }},
      {"dataset-sidecars",
       [](Checker& c, CheckResult& r, const CycleSearchOptions& o) {
         r.summary = "bundled datasets match their expected-property files";
         for (const auto& name : dataset_names()) {
           const auto d = bundled_dataset(name);
           const auto props = dataset_properties(name);
           std::map<std::string, std::string> actual;
           const MetricGraph& g = graph_of(d);
           actual["V"] = std::to_string(g.num_vertices());
           actual["E"] = std::to_string(g.num_edges());
           if (const auto* m = std::get_if<CombinatorialMap>(&d)) {
             actual["kind"] = "map";
             const auto type = map_type_check(*m);
             const auto trace = trace_faces(*m);
             const auto s = systoles_equal_faces(*m, o);
             actual["F"] = std::to_string(trace.faces.size());
             actual["p"] = std::to_string(type.p);
             actual["q"] = std::to_string(type.q);
             actual["girth"] = std::to_string(s.girth);
             actual["girth_cycles"] = std::to_string(s.girth_cycle_count);
             actual["orientable"] = trace.orientable ? "true" : "false";
             actual["flag_transitive"] = flag_transitivity(*m).transitive ? "true" : "false";
           } else {
             actual["kind"] = "graph";
             actual["rank"] = std::to_string(g.rank());
           }
           bool ok = !props.empty();
           std::string mismatch;
           for (const auto& [key, value] : props) {
             auto it = actual.find(key);
             if (it == actual.end() || it->second != value) {
               ok = false;
               mismatch += " " + key + "=" + value + "/" +
                           (it == actual.end() ? std::string("?") : it->second);
             }
           }
           c.expect(ok, name + (ok ? ": " + std::to_string(props.size()) + " properties match"
                                   : ": mismatch (expected/actual)" + mismatch));
         }
       }},
      {"klein-chain",
       [](Checker& c, CheckResult& r, const CycleSearchOptions& o) {
         r.summary = "Klein {7,3}: conditional witness of dimension above the vcd";
         const CombinatorialMap m = map_dataset("klein_73");
         const auto e = euler_relations(m);
         c.expect(e.all() && e.V == 56 && e.E == 84 && e.F == 24 && e.n == 29,
                  "V=56, E=84, F=24, n=29 and the counting identities");
         const auto s = systoles_equal_faces(m, o);
         c.note("girth " + std::to_string(s.girth) + ", " + std::to_string(s.girth_cycle_count) +
                " girth cycles, " + std::to_string(s.face_count) + " faces");
         if (!s.equal) {
           for (const Cycle& extra : s.extra_min_cycles) c.note("extra girth cycle: " + extra.to_string());
           r.status = CheckStatus::Conditional;
           r.summary += " (skipped: girth cycles are not exactly the faces)";
           return;
         }
         const MetricGraph g = normalize_volume(m.skeleton()).renamed("klein_73_equilateral");
         const long n = g.rank();
         const long faces = static_cast<long>(s.face_count);
         const long p = static_cast<long>(s.face_length);
         const Membership mem = classify_membership(g, o);
         c.expect(static_cast<long>(mem.systoles.size()) == faces && faces * p == 6 * (n - 1),
                  std::to_string(mem.systoles.size()) + " systoles = (6/p)(n-1) < n");
         c.expect(!mem.in_W && static_cast<long>(mem.lattice.rank) <= faces - 1 &&
                      !mem.lattice.index.has_value(),
                  "not well-rounded: lattice rank " + std::to_string(mem.lattice.rank) +
                      " < " + std::to_string(n) + ", infinite index");
         c.expect(mem.in_Vprime, "systoles geometrically fill");
         const auto dim = local_deformation_dimension(g, o);
         const auto vcd = vcd_witness(g, dim);
         c.expect(dim.lower_bound == 60 && static_cast<long>(dim.dimension) >= dim.lower_bound,
                  "dimension " + std::to_string(dim.dimension) + " >= E - F = " +
                      std::to_string(dim.lower_bound));
         c.expect(vcd.vcd == 55 && vcd.exceeds,
                  "dimension exceeds vcd 2n - 3 = " + std::to_string(vcd.vcd));
       }},
  };
  return defs;
}

}  // namespace

std::vector<std::string> verification_check_names() {
  std::vector<std::string> names;
  for (const auto& d : checks()) names.push_back(d.name);
  return names;
}

std::vector<CheckResult> run_verification(std::string_view filter,
                                          const CycleSearchOptions& options) {
  std::vector<CheckResult> results;
  for (const auto& def : checks()) {
    if (!filter.empty() && def.name.find(filter) == std::string::npos) continue;
    CheckResult result;
    result.name = def.name;
    result.status = CheckStatus::Pass;
    Checker checker(result);
    try {
      def.body(checker, result, options);
    } catch (const Error& e) {
      checker.expect(false, std::string(to_string(e.kind())) + ": " + e.what());
    }
    if (checker.failed()) result.status = CheckStatus::Fail;
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace systole
