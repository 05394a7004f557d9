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

#include "rotakit/io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace rotakit {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InputError((path.empty() ? std::string("document") : path) + ": " +
                   message);
}

std::string at_key(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at_index(const std::string& path, std::size_t k) {
  return path + "[" + std::to_string(k) + "]";
}

const Json& field(const Json& j, const std::string& key,
                  const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

// Looks up a name in a list of names.
int lookup(const std::vector<std::string>& names, const std::string& name,
           const std::string& what, const std::string& path) {
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k] == name) return static_cast<int>(k);
  }
  fail(path, "unknown " + what + " '" + name + "'");
}

std::vector<std::string> alternative_ids(
    const std::vector<Alternative>& alternatives) {
  std::vector<std::string> ids;
  for (const Alternative& a : alternatives) ids.push_back(a.id);
  return ids;
}

std::vector<std::string> profile_ids(const std::vector<Profile>& profiles) {
  std::vector<std::string> ids;
  for (const Profile& p : profiles) ids.push_back(p.id);
  return ids;
}

Preference parse_order(const Json& j, const std::vector<std::string>& alts,
                       const std::string& path) {
  std::vector<int> ranks(alts.size(), -1);
  int level = 0;
  auto place = [&](const Json& item, const std::string& p) {
    const int x = lookup(alts, as_string(item, p), "alternative", p);
    if (ranks[x] != -1) fail(p, "alternative listed twice");
    ranks[x] = level;
  };
  const Json& order = as_array(j, path);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::string p = at_index(path, k);
    if (order[k].is_array()) {
      for (std::size_t t = 0; t < order[k].size(); ++t) {
        place(order[k][t], at_index(p, t));
      }
    } else {
      place(order[k], p);
    }
    ++level;
  }
  for (int r : ranks) {
    if (r < 0) fail(path, "order must list every alternative");
  }
  return Preference(std::move(ranks));
}

Profile parse_profile(const Json& j, const std::vector<std::string>& alts,
                      const std::string& path) {
  Profile profile;
  profile.id = as_string(field(j, "id", path), at_key(path, "id"));
  if (j.contains("ranks")) {
    const std::string p = at_key(path, "ranks");
    const Json& ranks = as_array(j["ranks"], p);
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      const std::string pi = at_index(p, i);
      const Json& row = as_array(ranks[i], pi);
      if (row.size() != alts.size()) {
        fail(pi, "expected " + std::to_string(alts.size()) + " ranks");
      }
      std::vector<int> r;
      for (std::size_t x = 0; x < row.size(); ++x) {
        r.push_back(as_int(row[x], at_index(pi, x)));
      }
      try {
        profile.prefs.emplace_back(std::move(r));
      } catch (const InputError& e) {
        fail(pi, e.what());
      }
    }
  } else if (j.contains("orders")) {
    const std::string p = at_key(path, "orders");
    const Json& orders = as_array(j["orders"], p);
    for (std::size_t i = 0; i < orders.size(); ++i) {
      profile.prefs.push_back(parse_order(orders[i], alts, at_index(p, i)));
    }
  } else {
    fail(path, "profile needs 'ranks' or 'orders'");
  }
  return profile;
}

Json alt_set_json(const AltSet& s, const std::vector<Alternative>& alts) {
  Json out = Json::array();
  for (AltIndex x : s) out.push_back(alts.at(x).id);
  return out;
}

Json state_set_json(const std::vector<int>& s, const RightsStructure& rights) {
  Json out = Json::array();
  for (int t : s) out.push_back(rights.state(t).id);
  return out;
}

Json coalition_json(Coalition k) { return Json(k.members()); }

std::string kind_name(StateKind kind) {
  switch (kind) {
    case StateKind::kBase:
      return "base";
    case StateKind::kGraphPair:
      return "graph";
    case StateKind::kOpaque:
      return "opaque";
  }
  return "opaque";
}

StateKind parse_kind(const std::string& name, const std::string& path) {
  if (name == "base") return StateKind::kBase;
  if (name == "graph") return StateKind::kGraphPair;
  if (name == "opaque") return StateKind::kOpaque;
  fail(path, "unknown state kind '" + name + "'");
}

std::string profile_name(const SocialChoiceRule& f, int r) {
  return r >= 0 ? f.domain.at(r).id : std::string();
}

std::string alt_name(const SocialChoiceRule& f, AltIndex x) {
  return x >= 0 ? f.alternatives.at(x).id : std::string();
}

}  // namespace

int Document::profile_index(const std::string& id) const {
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    if (profiles[k].id == id) return static_cast<int>(k);
  }
  throw InputError("unknown profile '" + id + "'");
}

SocialChoiceRule Document::scr() const {
  if (!choices) throw InputError("document has no 'scr' section");
  SocialChoiceRule f;
  f.alternatives = alternatives;
  f.num_agents = num_agents;
  f.domain = profiles;
  f.choices = *choices;
  f.validate();
  return f;
}

Document Document::FromScr(const SocialChoiceRule& f) {
  Document doc;
  doc.alternatives = f.alternatives;
  doc.num_agents = f.num_agents;
  doc.profiles = f.domain;
  doc.choices = f.choices;
  return doc;
}

Document parse_document(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  Document doc;
  const Json& alts = as_array(field(j, "alternatives", ""), "alternatives");
  for (std::size_t k = 0; k < alts.size(); ++k) {
    const std::string p = at_index("alternatives", k);
    if (alts[k].is_string()) {
      const std::string id = alts[k].get<std::string>();
      doc.alternatives.push_back(Alternative{id, id});
    } else {
      const std::string id = as_string(field(alts[k], "id", p), p + ".id");
      std::string label = id;
      if (alts[k].contains("label")) {
        label = as_string(alts[k]["label"], p + ".label");
      }
      doc.alternatives.push_back(Alternative{id, label});
    }
  }
  const std::vector<std::string> ids = alternative_ids(doc.alternatives);
  const Json& profiles = as_array(field(j, "profiles", ""), "profiles");
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    doc.profiles.push_back(
        parse_profile(profiles[k], ids, at_index("profiles", k)));
  }
  if (j.contains("agents")) {
    doc.num_agents = as_int(j["agents"], "agents");
  } else if (!doc.profiles.empty()) {
    doc.num_agents = doc.profiles.front().num_agents();
  }
  for (std::size_t k = 0; k < doc.profiles.size(); ++k) {
    if (doc.profiles[k].num_agents() != doc.num_agents) {
      fail(at_index("profiles", k),
           "expected " + std::to_string(doc.num_agents) + " agents");
    }
  }
  if (j.contains("scr")) {
    const Json& scr = j["scr"];
    if (!scr.is_object()) fail("scr", "expected an object");
    std::vector<AltSet> choices(doc.profiles.size());
    std::vector<bool> seen(doc.profiles.size(), false);
    for (auto it = scr.begin(); it != scr.end(); ++it) {
      const std::string p = at_key("scr", it.key());
      const int r =
          lookup(profile_ids(doc.profiles), it.key(), "profile", "scr");
      const Json& set = as_array(it.value(), p);
      std::vector<AltIndex> xs;
      for (std::size_t t = 0; t < set.size(); ++t) {
        const std::string pt = at_index(p, t);
        xs.push_back(lookup(ids, as_string(set[t], pt), "alternative", pt));
      }
      choices[r] = make_alt_set(std::move(xs));
      seen[r] = true;
    }
    for (std::size_t r = 0; r < seen.size(); ++r) {
      if (!seen[r]) {
        fail("scr", "no choice set for profile '" + doc.profiles[r].id + "'");
      }
    }
    doc.choices = std::move(choices);
    doc.scr();  // Validates.
  }
  if (j.contains("rights")) {
    doc.rights = rights_from_json(j["rights"], doc.alternatives, doc.profiles,
                                  doc.num_agents);
  }
  if (j.contains("orderings")) {
    const Json& ord = j["orderings"];
    if (!ord.is_object()) fail("orderings", "expected an object");
    if (!doc.choices) fail("orderings", "orderings need an 'scr' section");
    OrderingWitness orderings(doc.profiles.size());
    std::vector<bool> seen(doc.profiles.size(), false);
    for (auto it = ord.begin(); it != ord.end(); ++it) {
      const std::string p = at_key("orderings", it.key());
      const int r =
          lookup(profile_ids(doc.profiles), it.key(), "profile", "orderings");
      const Json& list = as_array(it.value(), p);
      for (std::size_t t = 0; t < list.size(); ++t) {
        const std::string pt = at_index(p, t);
        orderings[r].push_back(
            lookup(ids, as_string(list[t], pt), "alternative", pt));
      }
      seen[r] = true;
    }
    const SocialChoiceRule f = doc.scr();
    for (std::size_t r = 0; r < seen.size(); ++r) {
      if (!seen[r]) {
        fail("orderings",
             "no ordering for profile '" + doc.profiles[r].id + "'");
      }
      try {
        validate_ordering(f, static_cast<int>(r), orderings[r]);
      } catch (const InputError& e) {
        fail(at_key("orderings", doc.profiles[r].id), e.what());
      }
    }
    doc.orderings = std::move(orderings);
  }
  return doc;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Document load_document(const std::string& path) {
  return parse_document(load_json(path));
}

Json to_json(const Document& doc) {
  Json j;
  Json alts = Json::array();
  for (const Alternative& a : doc.alternatives) {
    if (a.label == a.id) {
      alts.push_back(a.id);
    } else {
      alts.push_back(Json{{"id", a.id}, {"label", a.label}});
    }
  }
  j["alternatives"] = std::move(alts);
  j["agents"] = doc.num_agents;
  Json profiles = Json::array();
  for (const Profile& p : doc.profiles) {
    Json ranks = Json::array();
    for (const Preference& pref : p.prefs) ranks.push_back(pref.ranks());
    profiles.push_back(Json{{"id", p.id}, {"ranks", std::move(ranks)}});
  }
  j["profiles"] = std::move(profiles);
  if (doc.choices) {
    Json scr = Json::object();
    for (std::size_t r = 0; r < doc.profiles.size(); ++r) {
      scr[doc.profiles[r].id] = alt_set_json((*doc.choices)[r],
                                             doc.alternatives);
    }
    j["scr"] = std::move(scr);
  }
  if (doc.rights) {
    j["rights"] = rights_to_json(*doc.rights, doc.alternatives, doc.profiles);
  }
  if (doc.orderings) {
    Json ord = Json::object();
    for (std::size_t r = 0; r < doc.profiles.size(); ++r) {
      ord[doc.profiles[r].id] = alt_set_json((*doc.orderings)[r],
                                             doc.alternatives);
    }
    j["orderings"] = std::move(ord);
  }
  return j;
}

Json rights_to_json(const RightsStructure& rights,
                    const std::vector<Alternative>& alternatives,
                    const std::vector<Profile>& profiles) {
  Json states = Json::array();
  for (const State& s : rights.states()) {
    Json st{{"id", s.id},
            {"kind", kind_name(s.kind)},
            {"outcome", alternatives.at(s.outcome).id}};
    if (s.profile >= 0) st["profile"] = profiles.at(s.profile).id;
    states.push_back(std::move(st));
  }
  Json gamma = Json::array();
  for (int s = 0; s < rights.num_states(); ++s) {
    for (const RightsArc& arc : rights.arcs_from(s)) {
      Json coalitions = Json::array();
      for (Coalition k : arc.coalitions) {
        coalitions.push_back(coalition_json(k));
      }
      Json entry{{"from", rights.state(s).id},
                 {"to", rights.state(arc.to).id},
                 {"coalitions", std::move(coalitions)}};
      if (arc.rule != 0) entry["rule"] = arc.rule;
      gamma.push_back(std::move(entry));
    }
  }
  return Json{{"states", std::move(states)}, {"gamma", std::move(gamma)}};
}

RightsStructure rights_from_json(const Json& j,
                                 const std::vector<Alternative>& alternatives,
                                 const std::vector<Profile>& profiles,
                                 int num_agents) {
  const std::vector<std::string> alt_ids = alternative_ids(alternatives);
  const std::vector<std::string> prof_ids = profile_ids(profiles);
  RightsStructure rights;
  const Json& states = as_array(field(j, "states", "rights"), "rights.states");
  std::vector<std::string> state_ids;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const std::string p = at_index("rights.states", k);
    State s;
    s.id = as_string(field(states[k], "id", p), p + ".id");
    s.kind = states[k].contains("kind")
                 ? parse_kind(as_string(states[k]["kind"], p + ".kind"),
                              p + ".kind")
                 : StateKind::kOpaque;
    s.outcome = lookup(alt_ids,
                       as_string(field(states[k], "outcome", p), p + ".outcome"),
                       "alternative", p + ".outcome");
    if (states[k].contains("profile")) {
      s.profile = lookup(prof_ids,
                         as_string(states[k]["profile"], p + ".profile"),
                         "profile", p + ".profile");
    }
    state_ids.push_back(s.id);
    rights.add_state(std::move(s));
  }
  if (j.contains("gamma")) {
    const Json& gamma = as_array(j["gamma"], "rights.gamma");
    for (std::size_t k = 0; k < gamma.size(); ++k) {
      const std::string p = at_index("rights.gamma", k);
      const int from = lookup(
          state_ids, as_string(field(gamma[k], "from", p), p + ".from"),
          "state", p + ".from");
      const int to =
          lookup(state_ids, as_string(field(gamma[k], "to", p), p + ".to"),
                 "state", p + ".to");
      const int rule =
          gamma[k].contains("rule") ? as_int(gamma[k]["rule"], p + ".rule")
                                    : 0;
      const std::string pc = p + ".coalitions";
      const Json& coalitions = as_array(field(gamma[k], "coalitions", p), pc);
      for (std::size_t c = 0; c < coalitions.size(); ++c) {
        const std::string pk = at_index(pc, c);
        std::vector<int> members;
        for (std::size_t t = 0; t < as_array(coalitions[c], pk).size(); ++t) {
          const int i = as_int(coalitions[c][t], at_index(pk, t));
          if (i < 0 || i >= num_agents) fail(pk, "agent out of range");
          members.push_back(i);
        }
        try {
          rights.grant(from, to, Coalition::Of(members), rule);
        } catch (const InputError& e) {
          fail(pk, e.what());
        }
      }
    }
  }
  try {
    rights.validate(static_cast<int>(alternatives.size()), num_agents);
  } catch (const InputError& e) {
    fail("rights", e.what());
  }
  return rights;
}

Json report_to_json(const SolutionReport& report,
                    const RightsStructure& rights,
                    const std::vector<Alternative>& alternatives) {
  Json j{{"concept", concept_name(report.concept_tag)}};
  Json sets = Json::array();
  for (const StateSet& s : report.state_sets) {
    sets.push_back(state_set_json(s, rights));
  }
  j["state_sets"] = std::move(sets);
  Json outcomes = Json::array();
  for (const AltSet& s : report.outcome_sets) {
    outcomes.push_back(alt_set_json(s, alternatives));
  }
  j["outcome_sets"] = std::move(outcomes);
  if (report.concept_tag == Concept::kMss) {
    Json witnesses = Json::array();
    for (const EntryWitness& w : report.witnesses) {
      Json coalitions = Json::array();
      for (Coalition k : w.path.coalitions) {
        coalitions.push_back(coalition_json(k));
      }
      witnesses.push_back(Json{{"from", rights.state(w.from).id},
                               {"path", state_set_json(w.path.states, rights)},
                               {"coalitions", std::move(coalitions)}});
    }
    j["witnesses"] = std::move(witnesses);
    j["deterrence"] = report.deterrence;
    j["external_stability"] = report.external_stability;
  }
  return j;
}

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kNone:
      return "none";
    case SearchStatus::kTruncated:
      return "truncated";
  }
  return "none";
}

Json to_json(const EfficiencyVerdict& v, const SocialChoiceRule& f) {
  Json j{{"condition", "efficiency"}, {"ok", v.ok}};
  if (!v.ok) {
    j["profile"] = profile_name(f, v.profile);
    j["dominated"] = alt_name(f, v.dominated);
    j["dominator"] = alt_name(f, v.dominator);
  }
  return j;
}

Json to_json(const MaskinVerdict& v, const SocialChoiceRule& f) {
  Json j{{"condition", "maskin"}, {"ok", v.ok}};
  if (!v.ok) {
    j["profile"] = profile_name(f, v.profile);
    j["profile_prime"] = profile_name(f, v.profile_prime);
    j["z"] = alt_name(f, v.z);
  }
  return j;
}

Json to_json(const IndirectVerdict& v, const SocialChoiceRule& f) {
  Json j{{"condition", "indirect"}, {"ok", v.ok}};
  Json witnesses = Json::array();
  for (const IndirectWitness& w : v.witnesses) {
    witnesses.push_back(Json{{"profile", profile_name(f, w.profile)},
                             {"profile_prime", profile_name(f, w.profile_prime)},
                             {"z", alt_name(f, w.z)},
                             {"chain", alt_set_json(w.chain, f.alternatives)},
                             {"agents", w.agents},
                             {"reversal_agent", w.reversal_agent}});
  }
  j["witnesses"] = std::move(witnesses);
  if (!v.ok) {
    j["profile"] = profile_name(f, v.profile);
    j["profile_prime"] = profile_name(f, v.profile_prime);
    j["z"] = alt_name(f, v.z);
  }
  return j;
}

Json to_json(const RotationMonotonicityVerdict& v, const SocialChoiceRule& f) {
  const std::string status = v.status == SearchStatus::kFound ? "satisfied"
                             : v.status == SearchStatus::kNone
                                 ? "violated"
                                 : "truncated";
  Json profiles = Json::array();
  for (const ProfileOrderings& p : v.profiles) {
    Json passing = Json::array();
    for (const auto& o : p.passing) {
      passing.push_back(alt_set_json(o, f.alternatives));
    }
    Json failures = Json::array();
    for (const OrderingFailure& fl : p.failures) {
      failures.push_back(
          Json{{"ordering", alt_set_json(fl.ordering, f.alternatives)},
               {"profile_prime", profile_name(f, fl.profile_prime)},
               {"position", fl.position}});
    }
    profiles.push_back(Json{{"profile", profile_name(f, p.profile)},
                            {"status", status_name(p.status)},
                            {"passing", std::move(passing)},
                            {"failures", std::move(failures)}});
  }
  return Json{{"condition", "rotation-monotonicity"},
              {"status", status},
              {"profiles", std::move(profiles)}};
}

Json to_json(const PropertyMVerdict& v, const SocialChoiceRule& f) {
  Json j{{"condition", "property-m"}, {"ok", v.ok}};
  if (!v.ok) {
    j["profile"] = profile_name(f, v.profile);
    j["profile_prime"] = profile_name(f, v.profile_prime);
    j["position"] = v.position;
  }
  return j;
}

Json to_json(const SharedOrderingResult& r, const SocialChoiceRule& f) {
  Json orderings = Json::object();
  for (std::size_t k = 0; k < r.orderings.size(); ++k) {
    orderings[f.domain[k].id] = alt_set_json(r.orderings[k], f.alternatives);
  }
  Json j{{"condition", "shared-ordering"},
         {"status", status_name(r.status)},
         {"orderings", std::move(orderings)}};
  if (r.failing_profile >= 0) {
    j["failing_profile"] = profile_name(f, r.failing_profile);
  }
  return j;
}

Json to_json(const ImplementationVerdict& v, const SocialChoiceRule& f,
             const RightsStructure& rights) {
  Json profiles = Json::array();
  for (const ProfileImplementation& p : v.profiles) {
    Json entry{{"profile", profile_name(f, p.profile)},
               {"ok", p.ok},
               {"expected", alt_set_json(p.expected, f.alternatives)},
               {"produced", alt_set_json(p.produced, f.alternatives)}};
    if (!p.reason.empty()) entry["reason"] = p.reason;
    if (!p.blocks.empty()) {
      Json blocks = Json::array();
      for (const auto& b : p.blocks) blocks.push_back(state_set_json(b, rights));
      entry["blocks"] = std::move(blocks);
    }
    profiles.push_back(std::move(entry));
  }
  return Json{{"ok", v.ok}, {"profiles", std::move(profiles)}};
}

Json to_json(const DiagnosticSets& d, const SocialChoiceRule& f,
             const RightsStructure& rights) {
  Json q_by = Json::object();
  for (const auto& [rp, states] : d.q_by_profile) {
    q_by[f.domain.at(rp).id] = state_set_json(states, rights);
  }
  return Json{{"M", state_set_json(d.m, rights)},
              {"U", state_set_json(d.u, rights)},
              {"Q", state_set_json(d.q, rights)},
              {"Q_by_profile", std::move(q_by)}};
}

namespace {

std::vector<std::string> string_list(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  const Json& arr = as_array(j, path);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    out.push_back(as_string(arr[k], at_index(path, k)));
  }
  return out;
}

std::vector<int> index_list(const Json& j, const std::vector<std::string>& names,
                            const std::string& what, const std::string& path) {
  std::vector<int> out;
  const Json& arr = as_array(j, path);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string p = at_index(path, k);
    out.push_back(lookup(names, as_string(arr[k], p), what, p));
  }
  return out;
}

void expect_domain(const Json& j, const std::string& name) {
  if (!j.is_object()) fail("", "expected an object");
  if (j.contains("domain") && j["domain"] != name) {
    fail("domain", "expected '" + name + "'");
  }
}

template <typename T, typename Validate>
void checked(T& value, const std::string& path, Validate validate) {
  try {
    validate(value);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

}  // namespace

std::vector<JobRotationProblem> parse_job_domain(const Json& j) {
  expect_domain(j, "jobs");
  const std::vector<std::string> jobs = string_list(field(j, "jobs", ""),
                                                    "jobs");
  std::vector<JobRotationProblem> out;
  const Json& profiles = as_array(field(j, "profiles", ""), "profiles");
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const std::string p = at_index("profiles", k);
    JobRotationProblem problem;
    problem.jobs = jobs;
    problem.id = profiles[k].contains("id")
                     ? as_string(profiles[k]["id"], p + ".id")
                     : std::string();
    const Json& orders = as_array(field(profiles[k], "orders", p),
                                  p + ".orders");
    for (std::size_t i = 0; i < orders.size(); ++i) {
      problem.orders.push_back(
          index_list(orders[i], jobs, "job", at_index(p + ".orders", i)));
    }
    checked(problem, p, [](const JobRotationProblem& q) { q.validate(); });
    out.push_back(std::move(problem));
  }
  return out;
}

std::vector<MarriageProblem> parse_marriage_domain(const Json& j) {
  expect_domain(j, "marriage");
  const std::vector<std::string> men = string_list(field(j, "men", ""), "men");
  const std::vector<std::string> women =
      string_list(field(j, "women", ""), "women");
  const bool pure = j.contains("pure") && j["pure"].is_boolean() &&
                    j["pure"].get<bool>();
  // A "self" entry ends the acceptable part of a list.
  auto parse_lists = [](const Json& lists,
                        const std::vector<std::string>& names,
                        const std::string& path) {
    std::vector<std::vector<int>> out;
    const Json& arr = as_array(lists, path);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string pk = at_index(path, k);
      std::vector<int> list;
      const Json& entries = as_array(arr[k], pk);
      for (std::size_t t = 0; t < entries.size(); ++t) {
        const std::string name = as_string(entries[t], at_index(pk, t));
        if (name == "self") break;
        list.push_back(lookup(names, name, "partner", at_index(pk, t)));
      }
      out.push_back(std::move(list));
    }
    return out;
  };
  std::vector<MarriageProblem> out;
  const Json& profiles = as_array(field(j, "profiles", ""), "profiles");
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const std::string p = at_index("profiles", k);
    MarriageProblem problem;
    problem.id = profiles[k].contains("id")
                     ? as_string(profiles[k]["id"], p + ".id")
                     : std::string();
    problem.men = men;
    problem.women = women;
    problem.pure = pure;
    problem.men_prefs =
        parse_lists(field(profiles[k], "men", p), women, p + ".men");
    problem.women_prefs =
        parse_lists(field(profiles[k], "women", p), men, p + ".women");
    checked(problem, p, [](const MarriageProblem& q) { q.validate(); });
    out.push_back(std::move(problem));
  }
  return out;
}

std::vector<Economy> parse_economy_domain(const Json& j) {
  expect_domain(j, "economy");
  const int agents = as_int(field(j, "agents", ""), "agents");
  const std::vector<std::string> houses =
      string_list(field(j, "houses", ""), "houses");
  std::vector<std::vector<int>> owners(houses.size());
  const Json& own = field(j, "owners", "");
  if (own.is_object()) {
    for (auto it = own.begin(); it != own.end(); ++it) {
      const std::string p = at_key("owners", it.key());
      const int h = lookup(houses, it.key(), "house", "owners");
      const Json& group = as_array(it.value(), p);
      for (std::size_t t = 0; t < group.size(); ++t) {
        owners[h].push_back(as_int(group[t], at_index(p, t)));
      }
    }
  } else {
    const Json& arr = as_array(own, "owners");
    if (arr.size() != houses.size()) fail("owners", "one group per house");
    for (std::size_t h = 0; h < arr.size(); ++h) {
      const std::string p = at_index("owners", h);
      for (std::size_t t = 0; t < as_array(arr[h], p).size(); ++t) {
        owners[h].push_back(as_int(arr[h][t], at_index(p, t)));
      }
    }
  }
  std::vector<Economy> out;
  const Json& profiles = as_array(field(j, "profiles", ""), "profiles");
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const std::string p = at_index("profiles", k);
    Economy e;
    e.id = profiles[k].contains("id") ? as_string(profiles[k]["id"], p + ".id")
                                      : std::string();
    e.num_agents = agents;
    e.houses = houses;
    e.owners = owners;
    const Json& orders = as_array(field(profiles[k], "orders", p),
                                  p + ".orders");
    for (std::size_t i = 0; i < orders.size(); ++i) {
      const std::string pi = at_index(p + ".orders", i);
      std::vector<int> order;
      const Json& entries = as_array(orders[i], pi);
      for (std::size_t t = 0; t < entries.size(); ++t) {
        const std::string name = as_string(entries[t], at_index(pi, t));
        const bool is_house =
            std::find(houses.begin(), houses.end(), name) != houses.end();
        if (!is_house && (name == "none" || name == "h0")) {
          order.push_back(kNoHouse);
        } else {
          order.push_back(lookup(houses, name, "house", at_index(pi, t)));
        }
      }
      e.orders.push_back(std::move(order));
    }
    checked(e, p, [](const Economy& q) { q.validate(); });
    out.push_back(std::move(e));
  }
  return out;
}

Json job_domain_to_json(const std::vector<JobRotationProblem>& domain) {
  if (domain.empty()) throw InputError("empty job domain");
  Json profiles = Json::array();
  for (const JobRotationProblem& p : domain) {
    Json orders = Json::array();
    for (const auto& order : p.orders) {
      Json names = Json::array();
      for (int job : order) names.push_back(p.jobs.at(job));
      orders.push_back(std::move(names));
    }
    profiles.push_back(Json{{"id", p.id}, {"orders", std::move(orders)}});
  }
  return Json{{"domain", "jobs"},
              {"jobs", domain.front().jobs},
              {"profiles", std::move(profiles)}};
}

Json marriage_domain_to_json(const std::vector<MarriageProblem>& domain) {
  if (domain.empty()) throw InputError("empty marriage domain");
  auto lists = [](const std::vector<std::vector<int>>& prefs,
                  const std::vector<std::string>& names) {
    Json out = Json::array();
    for (const auto& list : prefs) {
      Json row = Json::array();
      for (int k : list) row.push_back(names.at(k));
      out.push_back(std::move(row));
    }
    return out;
  };
  const MarriageProblem& first = domain.front();
  Json profiles = Json::array();
  for (const MarriageProblem& p : domain) {
    profiles.push_back(Json{{"id", p.id},
                            {"men", lists(p.men_prefs, p.women)},
                            {"women", lists(p.women_prefs, p.men)}});
  }
  return Json{{"domain", "marriage"},
              {"men", first.men},
              {"women", first.women},
              {"pure", first.pure},
              {"profiles", std::move(profiles)}};
}

Json economy_domain_to_json(const std::vector<Economy>& domain) {
  if (domain.empty()) throw InputError("empty economy domain");
  const Economy& first = domain.front();
  Json owners = Json::object();
  for (int h = 0; h < first.num_houses(); ++h) {
    owners[first.houses[h]] = first.owners[h];
  }
  Json profiles = Json::array();
  for (const Economy& e : domain) {
    Json orders = Json::array();
    for (const auto& order : e.orders) {
      Json names = Json::array();
      for (int h : order) {
        names.push_back(h == kNoHouse ? std::string("none") : e.houses.at(h));
      }
      orders.push_back(std::move(names));
    }
    profiles.push_back(Json{{"id", e.id}, {"orders", std::move(orders)}});
  }
  return Json{{"domain", "economy"},
              {"agents", first.num_agents},
              {"houses", first.houses},
              {"owners", std::move(owners)},
              {"profiles", std::move(profiles)}};
}

}  // namespace rotakit
