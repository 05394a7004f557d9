// Copyright 2026 The Rotakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python bindings. Documents cross the boundary as JSON text; the Python
// package converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "rotakit/cli.h"
#include "rotakit/conditions.h"
#include "rotakit/constructors.h"
#include "rotakit/domains.h"
#include "rotakit/io.h"
#include "rotakit/solvers.h"

namespace py = pybind11;

namespace rotakit {
namespace {

Document parse(const std::string& text) { return parse_document(Json::parse(text)); }

RightsStructure rights_or_full(const Document& doc) {
  if (doc.rights) return *doc.rights;
  return build_full_rights_structure(doc.scr());
}

std::string solve(const std::string& text, const std::string& concept_name,
                  const std::string& profile) {
  const Document doc = parse(text);
  const RightsStructure rights = rights_or_full(doc);
  const Concept c = parse_concept(concept_name);
  const int r = doc.profile_index(profile);
  const SocialEnvironment env(rights, doc.profiles[r]);
  SolutionReport report;
  switch (c) {
    case Concept::kCore:
      report = compute_core(env);
      break;
    case Concept::kMss:
      report = compute_mss(env);
      break;
    case Concept::kAbsorbing:
      report.state_sets = compute_absorbing_sets(env);
      break;
    case Concept::kGeneralizedStable:
      report.state_sets = compute_generalized_stable_sets(env);
      break;
    case Concept::kRotationPrograms:
      throw InputError("use the CLI for rotation-program partitions");
  }
  report.concept_tag = c;
  report.outcome_sets.clear();
  for (const StateSet& s : report.state_sets) {
    report.outcome_sets.push_back(outcomes_of(rights, s));
  }
  return report_to_json(report, rights, doc.alternatives).dump();
}

std::string check(const std::string& text, const std::string& condition) {
  const SocialChoiceRule f = parse(text).scr();
  if (condition == "efficiency") return to_json(check_efficiency(f), f).dump();
  if (condition == "maskin") {
    return to_json(check_maskin_monotonicity(f), f).dump();
  }
  if (condition == "indirect") {
    return to_json(check_indirect_monotonicity(f), f).dump();
  }
  if (condition == "rotation-monotonicity") {
    return to_json(check_rotation_monotonicity(f), f).dump();
  }
  if (condition == "shared-ordering") {
    return to_json(find_shared_ordering(f), f).dump();
  }
  throw InputError("unknown condition '" + condition + "'");
}

std::string construct(const std::string& text, int theorem) {
  Document doc = parse(text);
  const SocialChoiceRule f = doc.scr();
  if (theorem == 1) {
    doc.rights = build_full_rights_structure(f);
    const ImplementationVerdict v = verify_implementation_in_mss(*doc.rights, f);
    return Json{{"document", to_json(doc)},
                {"verification", to_json(v, f, *doc.rights)}}
        .dump();
  }
  if (theorem != 4) throw InputError("theorem must be 1 or 4");
  const SharedOrderingResult s = find_shared_ordering(f);
  if (s.status != SearchStatus::kFound) {
    return Json{{"obstruction", to_json(s, f)}}.dump();
  }
  doc.orderings = s.orderings;
  doc.rights = build_consecutive_rights_structure(f, s.orderings);
  const ImplementationVerdict v =
      verify_implementation_in_rotation_programs(*doc.rights, f);
  return Json{{"document", to_json(doc)},
              {"verification", to_json(v, f, *doc.rights)}}
      .dump();
}

std::vector<Allocation> pareto(const std::vector<std::vector<int>>& orders) {
  JobRotationProblem p;
  for (std::size_t k = 0; k < orders.size(); ++k) {
    p.jobs.push_back("j" + std::to_string(k + 1));
  }
  p.orders = orders;
  p.validate();
  return pareto_efficient_allocations(p);
}

std::tuple<int, std::string, std::string> run(
    const std::vector<std::string>& args) {
  std::vector<std::string> argv{"rotakit"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(argv, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace
}  // namespace rotakit

PYBIND11_MODULE(_rotakit, m) {
  m.doc() = "Rights structures, stable sets and implementation checks";
  py::register_exception<rotakit::InputError>(m, "InputError",
                                              PyExc_ValueError);
  py::register_exception<rotakit::CapExceeded>(m, "CapExceeded",
                                               PyExc_RuntimeError);
  m.def("solve", &rotakit::solve, py::arg("document"), py::arg("concept"),
        py::arg("profile"));
  m.def("check", &rotakit::check, py::arg("document"), py::arg("condition"));
  m.def("construct", &rotakit::construct, py::arg("document"),
        py::arg("theorem"));
  m.def("pareto_allocations", &rotakit::pareto, py::arg("orders"),
        "Pareto-efficient job allocations; orders are best-first job indices.");
  m.def("run_cli", &rotakit::run, py::arg("args"),
        "Runs the CLI in-process and returns (exit code, stdout, stderr).");
}
