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

#include "rotakit/cli.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotakit/conditions.h"
#include "rotakit/constructors.h"
#include "rotakit/domains.h"
#include "rotakit/dot.h"
#include "rotakit/generators.h"
#include "rotakit/io.h"
#include "rotakit/model.h"
#include "rotakit/rights.h"
#include "rotakit/solvers.h"

namespace rotakit {
namespace {

struct Caps {
  int order = 8;              // Largest #F(R) for ordering enumeration.
  std::uint64_t gss = 1u << 16;  // Candidate subsets for stable sets.
};

struct RunConfig {
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::optional<int> order_cap;
  std::optional<std::uint64_t> gss_cap;
  std::string chain = "endpoint";
  bool literal_direction = false;

  Caps caps;
  ChainReading reading() const {
    return chain == "last-mover" ? ChainReading::kLastMover
                              : ChainReading::kReversalAtEndpoint;
  }
  RotationDirection direction() const {
    return literal_direction ? RotationDirection::kLiteral
                             : RotationDirection::kForward;
  }
  OrderingOptions ordering_options() const {
    return OrderingOptions{caps.order, reading()};
  }
};

// "order=8,gss=65536"
void apply_caps_env(Caps& caps, const char* env) {
  if (env == nullptr) return;
  std::stringstream in(env);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw InputError("ROTAKIT_CAPS: expected key=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    long long parsed = 0;
    try {
      std::size_t used = 0;
      parsed = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw InputError("ROTAKIT_CAPS: bad value for '" + key + "'");
    }
    if (parsed <= 0) {
      throw InputError("ROTAKIT_CAPS: '" + key + "' must be positive");
    }
    if (key == "order") {
      caps.order = static_cast<int>(parsed);
    } else if (key == "gss") {
      caps.gss = static_cast<std::uint64_t>(parsed);
    } else {
      throw InputError("ROTAKIT_CAPS: unknown cap '" + key + "'");
    }
  }
}

// Everything a command may need from an input file. Domain files are turned
// into a document with an SCR; economies also carry one rights structure
// per profile because exclusion rights depend on preferences.
struct Input {
  Document doc;
  std::string domain;
  std::vector<RightsStructure> per_profile_rights;
  Json details;
};

Input load_input(const std::string& path, JobRule rule) {
  const Json j = load_json(path);
  Input in;
  if (!j.is_object() || !j.contains("domain")) {
    in.doc = parse_document(j);
    return in;
  }
  in.domain = j["domain"].is_string() ? j["domain"].get<std::string>() : "";
  if (in.domain == "jobs") {
    const auto problems = parse_job_domain(j);
    DomainScr d = job_rotation_scr(problems, rule);
    in.doc = Document::FromScr(d.scr);
    if (!d.orderings.empty()) in.doc.orderings = d.orderings;
    Json best = Json::array();
    for (const auto& p : problems) best.push_back(common_best_job(p));
    in.details = Json{{"common_best_job", std::move(best)}};
  } else if (in.domain == "marriage") {
    const auto problems = parse_marriage_domain(j);
    MarriageScr m = marriage_optimal_scr(problems);
    in.doc = Document::FromScr(m.scr);
    in.doc.orderings = m.orderings;
  } else if (in.domain == "economy") {
    const auto economies = parse_economy_domain(j);
    EconomyScr e = exclusion_core_scr(economies);
    in.doc = Document::FromScr(e.scr);
    for (const Economy& economy : economies) {
      in.per_profile_rights.push_back(exclusion_rights_structure(economy));
    }
  } else {
    throw InputError("domain: unknown domain '" + in.domain + "'");
  }
  return in;
}

std::vector<int> selected_profiles(const Document& doc,
                                   const std::string& profile) {
  if (!profile.empty()) return {doc.profile_index(profile)};
  std::vector<int> all(doc.profiles.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
  return all;
}

// The structure used for profile r: the one in the file, the exclusion
// structure of an economy, or else the canonical full structure.
const RightsStructure& rights_for(const Input& in, int r,
                                  std::optional<RightsStructure>& scratch) {
  if (in.doc.rights) return *in.doc.rights;
  if (!in.per_profile_rights.empty()) return in.per_profile_rights.at(r);
  if (!scratch) {
    if (!in.doc.choices) {
      throw InputError("input has neither 'rights' nor 'scr'");
    }
    scratch = build_full_rights_structure(in.doc.scr());
  }
  return *scratch;
}

// Runs fn(k) for k in [0, n), on up to `jobs` threads, keeping order.
template <typename T>
std::vector<T> run_parallel(int n, int jobs, const std::function<T(int)>& fn) {
  std::vector<T> out(n);
  if (jobs <= 1 || n <= 1) {
    for (int k = 0; k < n; ++k) out[k] = fn(k);
    return out;
  }
  for (int start = 0; start < n; start += jobs) {
    std::vector<std::future<T>> batch;
    const int end = std::min(n, start + jobs);
    for (int k = start; k < end; ++k) {
      batch.push_back(std::async(std::launch::async, fn, k));
    }
    for (int k = start; k < end; ++k) out[k] = batch[k - start].get();
  }
  return out;
}

std::string set_text(const AltSet& s, const std::vector<Alternative>& alts) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) out += ",";
    out += alts.at(s[k]).id;
  }
  return out + "}";
}

struct ProfileResult {
  Json json;
  std::string text;
  int code = kExitOk;
};

ProfileResult solve_profile(const RightsStructure& rights,
                            const Document& doc, int r, Concept c,
                            const RunConfig& config) {
  const Profile& profile = doc.profiles.at(r);
  const SocialEnvironment env(rights, profile);
  ProfileResult result;
  SolutionReport report;
  report.concept_tag = c;
  Json extra = Json::object();
  switch (c) {
    case Concept::kCore:
      report = compute_core(env);
      break;
    case Concept::kAbsorbing:
      report.state_sets = compute_absorbing_sets(env);
      break;
    case Concept::kMss:
      report = compute_mss(env);
      if (!report.deterrence || !report.external_stability) {
        result.code = kExitSolveFailure;
      }
      break;
    case Concept::kGeneralizedStable:
      try {
        report.state_sets = compute_generalized_stable_sets(env, config.caps.gss);
      } catch (const CapExceeded& e) {
        result.code = kExitTruncated;
        extra["truncated"] = e.what();
      }
      break;
    case Concept::kRotationPrograms: {
      const ImprovementDigraph g = build_improvement_digraph(env);
      const SolutionReport mss = compute_mss(g, rights);
      StateSet all;
      for (const StateSet& s : mss.state_sets) {
        all.insert(all.end(), s.begin(), s.end());
      }
      std::sort(all.begin(), all.end());
      const PartitionResult part =
          partition_into_rotation_programs(g, env, all, config.direction());
      if (part.ok) {
        report.state_sets = part.blocks;
      } else {
        result.code = kExitSolveFailure;
        extra["failure"] = part.reason;
        if (part.witness_state >= 0) {
          extra["witness_state"] = rights.state(part.witness_state).id;
        }
      }
      break;
    }
  }
  report.concept_tag = c;
  if (report.outcome_sets.size() != report.state_sets.size()) {
    report.outcome_sets.clear();
    for (const StateSet& s : report.state_sets) {
      report.outcome_sets.push_back(outcomes_of(rights, s));
    }
  }
  result.json = report_to_json(report, rights, doc.alternatives);
  result.json["profile"] = profile.id;
  for (auto it = extra.begin(); it != extra.end(); ++it) {
    result.json[it.key()] = it.value();
  }
  std::string line = profile.id + ": " + concept_name(c);
  for (const AltSet& s : report.outcome_sets) {
    line += " " + set_text(s, doc.alternatives);
  }
  if (result.code == kExitTruncated) line += " truncated";
  if (result.code == kExitSolveFailure) line += " failed";
  result.text = line + "\n";
  return result;
}

int worst(int a, int b) {
  // Input errors dominate, then obstruction, truncation, solve failure.
  auto weight = [](int code) {
    switch (code) {
      case kExitInputError:
        return 4;
      case kExitObstruction:
        return 3;
      case kExitTruncated:
        return 2;
      case kExitSolveFailure:
        return 1;
      default:
        return 0;
    }
  };
  return weight(a) >= weight(b) ? a : b;
}

struct Emitter {
  const RunConfig& config;
  std::ostream& out;

  void emit(const Json& j, const std::string& text) const {
    const std::string body =
        config.format == "text" ? text : j.dump(2) + "\n";
    if (config.output.empty()) {
      out << body;
      return;
    }
    std::ofstream file(config.output);
    if (!file) throw InputError("cannot write '" + config.output + "'");
    file << body;
  }
};

int cmd_solve(const RunConfig& config, const Emitter& emitter,
              const std::string& path, const std::string& concept_arg,
              const std::string& profile_arg) {
  const Concept c = parse_concept(concept_arg);
  const Input in = load_input(path, JobRule::kEfficient);
  const std::vector<int> profiles = selected_profiles(in.doc, profile_arg);
  std::optional<RightsStructure> scratch;
  // Resolve the shared structure before fanning out.
  for (int r : profiles) rights_for(in, r, scratch);
  const std::function<ProfileResult(int)> task = [&](int k) {
    std::optional<RightsStructure> unused;
    const int r = profiles[k];
    const RightsStructure& rights =
        scratch ? *scratch : rights_for(in, r, unused);
    return solve_profile(rights, in.doc, r, c, config);
  };
  const std::vector<ProfileResult> results = run_parallel<ProfileResult>(
      static_cast<int>(profiles.size()), config.jobs, task);
  Json reports = Json::array();
  std::string text;
  int code = kExitOk;
  for (const ProfileResult& res : results) {
    reports.push_back(res.json);
    text += res.text;
    code = worst(code, res.code);
  }
  emitter.emit(Json{{"command", "solve"},
                    {"concept", concept_name(c)},
                    {"reports", std::move(reports)}},
               text);
  return code;
}

std::optional<OrderingWitness> orderings_for(const Input& in,
                                             const SocialChoiceRule& f,
                                             const RunConfig& config,
                                             SharedOrderingResult* search) {
  if (in.doc.orderings) return in.doc.orderings;
  SharedOrderingResult r = find_shared_ordering(f, config.ordering_options());
  if (search != nullptr) *search = r;
  if (r.status != SearchStatus::kFound) return std::nullopt;
  return r.orderings;
}

int cmd_check(const RunConfig& config, const Emitter& emitter,
              const std::string& path, const std::string& condition) {
  static const std::vector<std::string> kAll = {
      "efficiency", "domain",        "maskin",         "indirect",
      "rotation-monotonicity",       "property-m",     "shared-ordering"};
  std::vector<std::string> conditions;
  if (condition == "all") {
    conditions = kAll;
  } else if (std::find(kAll.begin(), kAll.end(), condition) != kAll.end()) {
    conditions = {condition};
  } else {
    throw InputError("unknown condition '" + condition + "'");
  }
  const Input in = load_input(path, JobRule::kEfficient);
  const SocialChoiceRule f = in.doc.scr();
  Json verdicts = Json::array();
  std::string text;
  int code = kExitOk;
  auto line = [&](const std::string& name, const std::string& verdict) {
    text += name + ": " + verdict + "\n";
  };
  for (const std::string& name : conditions) {
    if (name == "efficiency") {
      const EfficiencyVerdict v = check_efficiency(f);
      verdicts.push_back(to_json(v, f));
      line(name, v.ok ? "ok" : "violated");
    } else if (name == "domain") {
      Json j{{"condition", "domain"}, {"ok", true}};
      Json violations = Json::array();
      for (const Profile& p : f.domain) {
        if (const auto bad = validate_domain_restriction(p)) {
          violations.push_back(Json{{"profile", p.id},
                                    {"x", f.alternatives[bad->x].id},
                                    {"y", f.alternatives[bad->y].id}});
        }
      }
      j["ok"] = violations.empty();
      j["violations"] = std::move(violations);
      line(name, j["ok"].get<bool>() ? "ok" : "violated");
      verdicts.push_back(std::move(j));
    } else if (name == "maskin") {
      const MaskinVerdict v = check_maskin_monotonicity(f);
      verdicts.push_back(to_json(v, f));
      line(name, v.ok ? "ok" : "violated");
    } else if (name == "indirect") {
      const IndirectVerdict v = check_indirect_monotonicity(f);
      verdicts.push_back(to_json(v, f));
      line(name, v.ok ? "ok" : "violated");
    } else if (name == "rotation-monotonicity") {
      const RotationMonotonicityVerdict v =
          check_rotation_monotonicity(f, config.ordering_options());
      Json j = to_json(v, f);
      line(name, j["status"].get<std::string>());
      if (v.status == SearchStatus::kTruncated) code = kExitTruncated;
      verdicts.push_back(std::move(j));
    } else if (name == "property-m") {
      SharedOrderingResult search;
      const auto orderings = orderings_for(in, f, config, &search);
      if (!orderings) {
        const bool truncated = search.status == SearchStatus::kTruncated;
        if (truncated) code = kExitTruncated;
        verdicts.push_back(Json{{"condition", "property-m"},
                                {"ok", false},
                                {"status", status_name(search.status)},
                                {"reason", "no circular orderings available"}});
        line(name, truncated ? "truncated" : "violated");
        continue;
      }
      const PropertyMVerdict v =
          check_property_m(f, *orderings, config.reading());
      verdicts.push_back(to_json(v, f));
      line(name, v.ok ? "ok" : "violated");
    } else if (name == "shared-ordering") {
      const SharedOrderingResult r =
          find_shared_ordering(f, config.ordering_options());
      verdicts.push_back(to_json(r, f));
      line(name, status_name(r.status));
      if (r.status == SearchStatus::kTruncated) code = kExitTruncated;
    }
  }
  if (code == kExitTruncated) text += "truncated\n";
  emitter.emit(Json{{"command", "check"}, {"verdicts", std::move(verdicts)}},
               text);
  return code;
}

int cmd_construct(const RunConfig& config, const Emitter& emitter,
                  const std::string& path, int theorem, std::string verify,
                  bool diagnostics, const std::string& rule) {
  const Input in =
      load_input(path, rule == "phi" ? JobRule::kPhi : JobRule::kEfficient);
  const SocialChoiceRule f = in.doc.scr();
  if (verify == "auto") verify = theorem == 1 ? "mss" : "rotation";
  Json result{{"command", "construct"}, {"theorem", theorem}};
  std::string text;
  Document built = in.doc;
  built.rights.reset();
  if (theorem == 1) {
    built.rights = build_full_rights_structure(f);
  } else {
    SharedOrderingResult search;
    const auto orderings = orderings_for(in, f, config, &search);
    if (!orderings) {
      result["obstruction"] = to_json(search, f);
      const bool truncated = search.status == SearchStatus::kTruncated;
      text = truncated ? "truncated\n"
                       : "obstruction: no shared circular ordering";
      if (!truncated && search.failing_profile >= 0) {
        text += " at profile " + f.domain[search.failing_profile].id;
      }
      if (!truncated) text += "\n";
      emitter.emit(result, text);
      return truncated ? kExitTruncated : kExitObstruction;
    }
    built.orderings = *orderings;
    built.rights = build_consecutive_rights_structure(f, *orderings);
  }
  result["document"] = to_json(built);
  text += "constructed " + std::to_string(built.rights->num_states()) +
          " states\n";
  int code = kExitOk;
  if (verify == "mss" || verify == "rotation") {
    const ImplementationVerdict v =
        verify == "mss" ? verify_implementation_in_mss(*built.rights, f)
                        : verify_implementation_in_rotation_programs(
                              *built.rights, f, config.direction());
    result["verification"] = to_json(v, f, *built.rights);
    result["verification"]["mode"] = verify;
    for (const ProfileImplementation& p : v.profiles) {
      text += f.domain[p.profile].id + ": " + (p.ok ? "pass" : "fail") +
              " " + set_text(p.produced, f.alternatives) + "\n";
    }
    if (!v.ok) code = kExitSolveFailure;
  } else if (verify != "none") {
    throw InputError("unknown verification mode '" + verify + "'");
  }
  if (diagnostics) {
    Json d = Json::object();
    for (int r = 0; r < f.num_profiles(); ++r) {
      d[f.domain[r].id] =
          to_json(compute_diagnostic_sets(*built.rights, f, r), f,
                  *built.rights);
    }
    result["diagnostics"] = std::move(d);
  }
  emitter.emit(result, text);
  return code;
}

int cmd_generate(const RunConfig& config, const Emitter& emitter,
                 const std::string& kind, int n, int profiles) {
  if (n <= 0 || profiles <= 0) {
    throw InputError("--n and --profiles must be positive");
  }
  Rng rng(config.seed);
  auto named = [](auto problem, int k) {
    problem.id = "R" + std::to_string(k + 1);
    return problem;
  };
  Json j;
  if (kind == "jobs" || kind == "common-best" || kind == "hat") {
    if (n > kMaxJobAgents) throw InputError("--n exceeds the job-domain cap");
    std::vector<JobRotationProblem> domain;
    for (int k = 0; k < profiles; ++k) {
      domain.push_back(named(kind == "jobs" ? random_job_problem(n, rng)
                             : kind == "hat"
                                 ? random_hat_problem(n, rng)
                                 : random_common_best_problem(n, rng),
                             k));
    }
    j = job_domain_to_json(domain);
  } else if (kind == "marriage") {
    if (n > kMaxMarriageSide) {
      throw InputError("--n exceeds the marriage-domain cap");
    }
    std::vector<MarriageProblem> domain;
    for (int k = 0; k < profiles; ++k) {
      domain.push_back(named(random_marriage_problem(n, n, true, rng), k));
    }
    j = marriage_domain_to_json(domain);
  } else if (kind == "economy") {
    if (n > kMaxEconomyAgents) {
      throw InputError("--n exceeds the economy-domain cap");
    }
    // Owners are drawn once and shared by every profile.
    const Economy base = random_economy(n, n, rng);
    std::vector<Economy> domain;
    for (int k = 0; k < profiles; ++k) {
      Economy e = random_economy(n, n, rng);
      e.owners = base.owners;
      domain.push_back(named(std::move(e), k));
    }
    j = economy_domain_to_json(domain);
  } else if (kind == "scr") {
    SocialChoiceRule f = random_efficient_scr(n, 2, profiles, rng);
    j = to_json(Document::FromScr(f));
  } else {
    throw InputError("unknown generator '" + kind + "'");
  }
  emitter.emit(j, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_domain(const RunConfig& config, const Emitter& emitter,
               const std::string& path, const std::string& rule) {
  const Input in =
      load_input(path, rule == "phi" ? JobRule::kPhi : JobRule::kEfficient);
  if (in.domain.empty()) {
    throw InputError("'" + path + "' is not a domain file");
  }
  const SocialChoiceRule f = in.doc.scr();
  Json result{{"command", "domain"},
              {"domain", in.domain},
              {"document", to_json(in.doc)}};
  if (!in.details.is_null()) result["details"] = in.details;
  std::string text = in.domain + ": " +
                     std::to_string(f.num_alternatives()) + " alternatives\n";
  for (int r = 0; r < f.num_profiles(); ++r) {
    text += f.domain[r].id + ": " + set_text(f.at(r), f.alternatives) + "\n";
  }
  emitter.emit(result, text);
  (void)config;
  return kExitOk;
}

int cmd_export_dot(const RunConfig& config, std::ostream& out,
                   const std::string& path, const std::string& profile_arg,
                   const std::string& highlight) {
  const Input in = load_input(path, JobRule::kEfficient);
  if (in.doc.profiles.empty()) throw InputError("no profiles");
  const int r = profile_arg.empty() ? 0 : in.doc.profile_index(profile_arg);
  std::optional<RightsStructure> scratch;
  const RightsStructure& rights = rights_for(in, r, scratch);
  const SocialEnvironment env(rights, in.doc.profiles[r]);
  const ImprovementDigraph g = build_improvement_digraph(env);
  DotOptions options;
  options.name = "improvement";
  if (highlight == "core") {
    options.highlight = compute_core(env).state_sets.front();
  } else if (highlight == "mss") {
    const SolutionReport mss = compute_mss(g, rights);
    options.clusters = mss.state_sets;
    for (const StateSet& s : mss.state_sets) {
      options.highlight.insert(options.highlight.end(), s.begin(), s.end());
    }
  } else if (highlight == "absorbing") {
    options.clusters = compute_absorbing_sets(g);
  } else if (highlight != "none") {
    throw InputError("unknown highlight '" + highlight + "'");
  }
  const std::string dot = to_dot(rights, g, in.doc.alternatives, options);
  if (config.output.empty()) {
    out << dot;
  } else {
    std::ofstream file(config.output);
    if (!file) throw InputError("cannot write '" + config.output + "'");
    file << dot;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Rights structures, stable sets and implementation checks",
               "rotakit"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();
  RunConfig config;
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", config.output, "Write output to a file");
  app.add_option("--seed", config.seed, "Seed for random generation");
  app.add_option("--jobs", config.jobs, "Profiles evaluated in parallel")
      ->check(CLI::PositiveNumber);
  app.add_option("--order-cap", config.order_cap,
                 "Largest choice set whose circular orderings are searched")
      ->check(CLI::PositiveNumber);
  app.add_option("--gss-cap", config.gss_cap,
                 "Candidate subsets examined for generalized stable sets")
      ->check(CLI::PositiveNumber);
  app.add_option("--chain", config.chain,
                 "Chain reading for rotation monotonicity")
      ->check(CLI::IsMember({"endpoint", "last-mover"}));
  app.add_flag("--literal-rotation-direction", config.literal_direction,
               "Require the backward improvement between consecutive "
               "rotation-program states");

  std::string path;
  std::string profile;

  std::string concept_arg = "mss";
  CLI::App* solve = app.add_subcommand("solve", "Compute a solution concept");
  solve->add_option("file", path, "Environment or domain file")->required();
  solve->add_option("--concept", concept_arg, "Solution concept")
      ->check(CLI::IsMember({"core", "absorbing", "mss", "gss", "rotation"}));
  solve->add_option("--profile", profile, "Profile id (default: all)");

  std::string condition = "all";
  CLI::App* check = app.add_subcommand("check", "Check SCR conditions");
  check->add_option("file", path, "SCR or domain file")->required();
  check->add_option("--condition", condition, "Condition to check")
      ->check(CLI::IsMember({"efficiency", "domain", "maskin", "indirect",
                             "rotation-monotonicity", "property-m",
                             "shared-ordering", "all"}));

  int theorem = 1;
  std::string kind;
  std::string verify = "auto";
  std::string rule = "efficient";
  bool diagnostics = false;
  CLI::App* construct =
      app.add_subcommand("construct", "Build an implementing rights structure");
  construct->add_option("file", path, "SCR or domain file")->required();
  auto* theorem_opt =
      construct->add_option("--theorem", theorem, "1: full, 4: consecutive")
          ->check(CLI::IsMember({1, 4}));
  construct->add_option("--kind", kind, "Alias for --theorem")
      ->check(CLI::IsMember({"full", "consecutive"}))
      ->excludes(theorem_opt);
  construct->add_option("--verify", verify, "Verification mode")
      ->check(CLI::IsMember({"auto", "mss", "rotation", "none"}));
  construct->add_flag("--diagnostics", diagnostics,
                      "Report the diagnostic state sets per profile");
  construct->add_option("--rule", rule, "Job-domain rule")
      ->check(CLI::IsMember({"efficient", "phi"}));

  std::string generate;
  int n = 3;
  int num_profiles = 2;
  CLI::App* domain =
      app.add_subcommand("domain", "Derive or generate domain instances");
  domain->add_option("file", path, "Domain file");
  domain->add_option("--rule", rule, "Job-domain rule")
      ->check(CLI::IsMember({"efficient", "phi"}));
  domain->add_option("--generate", generate, "Generator kind")
      ->check(CLI::IsMember(
          {"jobs", "common-best", "hat", "marriage", "economy", "scr"}));
  domain->add_option("--n", n, "Agents (or alternatives for scr)");
  domain->add_option("--profiles", num_profiles, "Profiles to generate");

  std::string highlight = "mss";
  CLI::App* dot = app.add_subcommand("export-dot", "Write the improvement "
                                                   "digraph as Graphviz DOT");
  dot->add_option("file", path, "Environment or domain file")->required();
  dot->add_option("--profile", profile, "Profile id (default: first)");
  dot->add_option("--highlight", highlight, "States to mark")
      ->check(CLI::IsMember({"mss", "core", "absorbing", "none"}));

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    apply_caps_env(config.caps, std::getenv("ROTAKIT_CAPS"));
    if (config.order_cap) config.caps.order = *config.order_cap;
    if (config.gss_cap) config.caps.gss = *config.gss_cap;
    const Emitter emitter{config, out};
    if (solve->parsed()) {
      return cmd_solve(config, emitter, path, concept_arg, profile);
    }
    if (check->parsed()) return cmd_check(config, emitter, path, condition);
    if (construct->parsed()) {
      if (!kind.empty()) theorem = kind == "full" ? 1 : 4;
      return cmd_construct(config, emitter, path, theorem, verify,
                           diagnostics, rule);
    }
    if (domain->parsed()) {
      if (!generate.empty()) {
        return cmd_generate(config, emitter, generate, n, num_profiles);
      }
      if (path.empty()) throw InputError("domain needs a file or --generate");
      return cmd_domain(config, emitter, path, rule);
    }
    if (dot->parsed()) {
      return cmd_export_dot(config, out, path, profile, highlight);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CapExceeded& e) {
    err << "truncated: " << e.what() << "\n";
    return kExitTruncated;
  }
  return kExitInputError;
}

}  // namespace rotakit
