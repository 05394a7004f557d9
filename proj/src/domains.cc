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

#include "rotakit/domains.h"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotakit {
namespace {

void check_permutation(const std::vector<int>& order, int n,
                       const std::string& what) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(n);
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) {
    throw InputError(what + " must rank every job exactly once");
  }
}

std::string profile_id(const std::string& id, int k) {
  return id.empty() ? "R" + std::to_string(k + 1) : id;
}

template <typename T>
std::vector<int> indices_in(const std::vector<T>& all,
                            const std::vector<T>& subset) {
  std::map<T, int> index;
  for (std::size_t k = 0; k < all.size(); ++k) {
    index.emplace(all[k], static_cast<int>(k));
  }
  std::vector<int> out;
  for (const T& x : subset) out.push_back(index.at(x));
  return out;
}

}  // namespace

std::string allocation_id(const Allocation& x,
                          const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ",";
    out += x[i] < 0 ? std::string("-") : names.at(x[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Job rotation.

void JobRotationProblem::validate() const {
  const int n = num_agents();
  if (n < 1) throw InputError("job problem needs at least one agent");
  if (n > kMaxJobAgents) {
    throw CapExceeded("job problems are capped at " +
                      std::to_string(kMaxJobAgents) + " agents, got " +
                      std::to_string(n));
  }
  if (static_cast<int>(jobs.size()) != n) {
    throw InputError("job problem needs as many jobs as agents");
  }
  for (int i = 0; i < n; ++i) {
    check_permutation(orders[i], n, "agent " + std::to_string(i));
  }
}

std::vector<Allocation> all_job_allocations(int n) {
  if (n > kMaxJobAgents) {
    throw CapExceeded("job allocation enumeration capped at " +
                      std::to_string(kMaxJobAgents) + " agents");
  }
  std::vector<Allocation> out;
  Allocation x(n);
  std::iota(x.begin(), x.end(), 0);
  do {
    out.push_back(x);
  } while (std::next_permutation(x.begin(), x.end()));
  return out;
}

Profile extend_job_preferences(const JobRotationProblem& problem,
                               const std::vector<Allocation>& allocations) {
  problem.validate();
  const int n = problem.num_agents();
  Profile profile;
  profile.id = problem.id;
  for (int i = 0; i < n; ++i) {
    std::vector<int> position(n);
    for (int p = 0; p < n; ++p) position[problem.orders[i][p]] = p;
    std::vector<int> ranks;
    ranks.reserve(allocations.size());
    for (const Allocation& x : allocations) ranks.push_back(position[x[i]]);
    profile.prefs.emplace_back(std::move(ranks));
  }
  return profile;
}

std::vector<Allocation> pareto_efficient_allocations(
    const JobRotationProblem& problem) {
  const std::vector<Allocation> all = all_job_allocations(problem.num_agents());
  const Profile profile = extend_job_preferences(problem, all);
  std::vector<Allocation> out;
  for (AltIndex x : pareto_frontier(profile)) out.push_back(all[x]);
  return out;
}

int common_best_job(const JobRotationProblem& problem) {
  problem.validate();
  const int best = problem.orders.front().front();
  for (const auto& order : problem.orders) {
    if (order.front() != best) return -1;
  }
  return best;
}

std::vector<int> best_job_counts(const JobRotationProblem& problem) {
  const int best = common_best_job(problem);
  if (best < 0) throw InputError("agents do not share a best job");
  std::vector<int> counts(problem.num_agents(), 0);
  for (const Allocation& x : pareto_efficient_allocations(problem)) {
    for (int i = 0; i < problem.num_agents(); ++i) {
      if (x[i] == best) ++counts[i];
    }
  }
  return counts;
}

Allocation swap_with_second_best(const JobRotationProblem& problem,
                                 const Allocation& x) {
  const int best = common_best_job(problem);
  if (best < 0) throw InputError("agents do not share a best job");
  if (problem.num_agents() < 2) throw InputError("need at least two agents");
  const auto holder_it = std::find(x.begin(), x.end(), best);
  if (holder_it == x.end()) throw InputError("allocation misses a job");
  const int holder = static_cast<int>(holder_it - x.begin());
  const int second = problem.orders[holder][1];
  const int other = static_cast<int>(
      std::find(x.begin(), x.end(), second) - x.begin());
  Allocation y = x;
  std::swap(y[holder], y[other]);
  return y;
}

std::vector<Allocation> circular_arrangement(
    const JobRotationProblem& problem) {
  const int best = common_best_job(problem);
  if (best < 0) throw InputError("agents do not share a best job");
  const int n = problem.num_agents();
  std::vector<std::deque<Allocation>> groups(n);
  for (const Allocation& x : pareto_efficient_allocations(problem)) {
    const int holder = static_cast<int>(
        std::find(x.begin(), x.end(), best) - x.begin());
    groups[holder].push_back(x);
  }
  int total = 0;
  int largest = 0;
  for (const auto& g : groups) {
    total += static_cast<int>(g.size());
    largest = std::max(largest, static_cast<int>(g.size()));
  }
  if (total < 2 || 2 * largest > total) {
    throw std::logic_error(
        "efficient allocations admit no circular arrangement");
  }
  // Agents by group size, largest first; ties by agent index.
  std::vector<int> by_size(n);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
    return groups[a].size() > groups[b].size();
  });
  auto take = [&](int rank) {
    Allocation x = std::move(groups[by_size[rank]].front());
    groups[by_size[rank]].pop_front();
    return x;
  };
  auto remaining = [&](int rank) {
    return static_cast<int>(groups[by_size[rank]].size());
  };

  std::vector<Allocation> out;
  const int excess = remaining(0) - remaining(1);
  if (excess > 0) {
    // Pair the surplus of the largest group with allocations from the
    // smallest groups.
    std::vector<Allocation> fillers;
    for (int rank = n - 1; rank >= 2 && static_cast<int>(fillers.size()) <
                                            excess;
         --rank) {
      while (remaining(rank) > 0 &&
             static_cast<int>(fillers.size()) < excess) {
        fillers.push_back(take(rank));
      }
    }
    for (int k = 0; k < excess; ++k) {
      out.push_back(take(0));
      out.push_back(std::move(fillers[k]));
    }
  }
  while (remaining(0) > 0) {
    int active = 0;
    while (active < n && remaining(active) > 0) ++active;
    const int rounds = remaining(active - 1);
    for (int k = 0; k < rounds; ++k) {
      for (int rank = 0; rank < active; ++rank) out.push_back(take(rank));
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Allocation& a = out[k];
    const Allocation& b = out[(k + 1) % out.size()];
    if (std::find(a.begin(), a.end(), best) - a.begin() ==
        std::find(b.begin(), b.end(), best) - b.begin()) {
      throw std::logic_error("circular arrangement repeats a holder");
    }
  }
  return out;
}

JobRotationProblem reverse_job_preferences(const JobRotationProblem& problem) {
  JobRotationProblem out = problem;
  for (auto& order : out.orders) std::reverse(order.begin(), order.end());
  return out;
}

Allocation swap_first_two(const Allocation& x) {
  if (x.size() < 2) throw InputError("need at least two agents");
  Allocation y = x;
  std::swap(y[0], y[1]);
  return y;
}

PhiResult build_phi(const JobRotationProblem& problem) {
  problem.validate();
  const int n = problem.num_agents();
  if (n < 2) throw InputError("phi needs at least two agents");
  const int top = problem.orders[0][0];
  if (problem.orders[1][0] != top) {
    throw InputError("agents 0 and 1 must share their top job");
  }
  std::vector<int> rest;
  for (int j = 0; j < n; ++j) {
    if (j != top) rest.push_back(j);
  }
  std::vector<std::vector<int>> position(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < n; ++p) position[i][problem.orders[i][p]] = p;
  }
  // Candidate sub-assignments: rest[0..n-3] go to agents 2..n-1 and the
  // last job is left over.
  std::vector<std::vector<int>> candidates;
  do {
    candidates.push_back(rest);
  } while (std::next_permutation(rest.begin(), rest.end()));
  auto dominates = [&](const std::vector<int>& a, const std::vector<int>& b) {
    bool strict = false;
    for (int k = 0; k + 1 < static_cast<int>(a.size()); ++k) {
      const int pa = position[k + 2][a[k]];
      const int pb = position[k + 2][b[k]];
      if (pa > pb) return false;
      if (pa < pb) strict = true;
    }
    return strict;
  };
  PhiResult result;
  std::set<Allocation> seen;
  for (const auto& c : candidates) {
    bool dominated = false;
    for (const auto& d : candidates) {
      if (dominates(d, c)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    ++result.sub_assignments;
    Allocation x(n);
    x[0] = top;
    x[1] = c.back();
    for (int k = 0; k + 2 < n; ++k) x[k + 2] = c[k];
    for (const Allocation& y : {x, swap_first_two(x)}) {
      if (seen.insert(y).second) result.ordered.push_back(y);
    }
  }
  result.complete =
      static_cast<int>(result.ordered.size()) == 2 * result.sub_assignments;
  return result;
}

DomainScr job_rotation_scr(const std::vector<JobRotationProblem>& domain,
                           JobRule rule) {
  if (domain.empty()) throw InputError("empty job domain");
  const int n = domain.front().num_agents();
  for (const auto& p : domain) {
    p.validate();
    if (p.jobs != domain.front().jobs) {
      throw InputError("job problems in a domain must share their jobs");
    }
  }
  DomainScr out;
  out.allocations = all_job_allocations(n);
  SocialChoiceRule& f = out.scr;
  f.num_agents = n;
  for (const Allocation& x : out.allocations) {
    const std::string id = allocation_id(x, domain.front().jobs);
    f.alternatives.push_back(Alternative{id, id});
  }
  bool orderings = true;
  for (std::size_t k = 0; k < domain.size(); ++k) {
    Profile profile = extend_job_preferences(domain[k], out.allocations);
    profile.id = profile_id(domain[k].id, static_cast<int>(k));
    f.domain.push_back(std::move(profile));
    std::vector<int> ordered;
    if (rule == JobRule::kEfficient) {
      f.choices.push_back(make_alt_set(indices_in(
          out.allocations, pareto_efficient_allocations(domain[k]))));
      if (common_best_job(domain[k]) >= 0 &&
          f.choices.back().size() >= 2) {
        ordered =
            indices_in(out.allocations, circular_arrangement(domain[k]));
      } else {
        orderings = false;
      }
    } else {
      const PhiResult phi = build_phi(domain[k]);
      ordered = indices_in(out.allocations, phi.ordered);
      f.choices.push_back(make_alt_set(ordered));
      orderings = orderings && phi.complete;
    }
    out.orderings.push_back(std::move(ordered));
  }
  if (!orderings) out.orderings.clear();
  f.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Marriage.

namespace {

void check_list(const std::vector<int>& list, int other_side,
                const std::string& who) {
  std::set<int> seen;
  for (int p : list) {
    if (p < 0 || p >= other_side || !seen.insert(p).second) {
      throw InputError(who + " has an invalid preference list");
    }
  }
}

// Position in the list; staying single sits just after the list and every
// unacceptable partner after that.
int marriage_rank(const std::vector<int>& list, int partner) {
  const int len = static_cast<int>(list.size());
  if (partner < 0) return len;
  const auto it = std::find(list.begin(), list.end(), partner);
  return it == list.end() ? len + 1 : static_cast<int>(it - list.begin());
}

}  // namespace

void MarriageProblem::validate() const {
  if (num_men() > kMaxMarriageSide || num_women() > kMaxMarriageSide) {
    throw CapExceeded("marriage problems are capped at " +
                      std::to_string(kMaxMarriageSide) + " per side");
  }
  if (static_cast<int>(men_prefs.size()) != num_men() ||
      static_cast<int>(women_prefs.size()) != num_women()) {
    throw InputError("need one preference list per man and per woman");
  }
  for (int m = 0; m < num_men(); ++m) {
    check_list(men_prefs[m], num_women(), "man " + men[m]);
  }
  for (int w = 0; w < num_women(); ++w) {
    check_list(women_prefs[w], num_men(), "woman " + women[w]);
  }
  if (pure) {
    if (num_men() != num_women()) {
      throw InputError("a pure marriage problem needs equal sides");
    }
    for (const auto& l : men_prefs) {
      if (static_cast<int>(l.size()) != num_women()) {
        throw InputError("a pure marriage problem needs complete lists");
      }
    }
    for (const auto& l : women_prefs) {
      if (static_cast<int>(l.size()) != num_men()) {
        throw InputError("a pure marriage problem needs complete lists");
      }
    }
  }
}

Matching matching_from_wives(const std::vector<int>& wife, int num_women) {
  Matching mu{wife, std::vector<int>(num_women, -1)};
  for (int m = 0; m < static_cast<int>(wife.size()); ++m) {
    if (wife[m] < 0) continue;
    if (wife[m] >= num_women || mu.husband[wife[m]] != -1) {
      throw InputError("not a matching");
    }
    mu.husband[wife[m]] = m;
  }
  return mu;
}

Matching deferred_acceptance(const MarriageProblem& problem, Side proposers) {
  problem.validate();
  const bool men_propose = proposers == Side::kMen;
  const auto& propose = men_propose ? problem.men_prefs : problem.women_prefs;
  const auto& receive = men_propose ? problem.women_prefs : problem.men_prefs;
  const int np = static_cast<int>(propose.size());
  const int nr = static_cast<int>(receive.size());
  std::vector<int> next(np, 0);
  std::vector<int> held(nr, -1);
  std::deque<int> free;
  for (int p = 0; p < np; ++p) free.push_back(p);
  while (!free.empty()) {
    const int p = free.front();
    free.pop_front();
    if (next[p] >= static_cast<int>(propose[p].size())) continue;
    const int r = propose[p][next[p]++];
    const int rank_p = marriage_rank(receive[r], p);
    if (rank_p > marriage_rank(receive[r], -1)) {
      free.push_back(p);  // Unacceptable to r.
    } else if (held[r] == -1) {
      held[r] = p;
    } else if (rank_p < marriage_rank(receive[r], held[r])) {
      free.push_back(held[r]);
      held[r] = p;
    } else {
      free.push_back(p);
    }
  }
  std::vector<int> wife(problem.num_men(), -1);
  for (int r = 0; r < nr; ++r) {
    if (held[r] < 0) continue;
    if (men_propose) {
      wife[held[r]] = r;
    } else {
      wife[r] = held[r];
    }
  }
  return matching_from_wives(wife, problem.num_women());
}

StabilityVerdict is_stable(const MarriageProblem& problem, const Matching& mu) {
  for (int m = 0; m < problem.num_men(); ++m) {
    if (marriage_rank(problem.men_prefs[m], mu.wife[m]) >
        marriage_rank(problem.men_prefs[m], -1)) {
      return StabilityVerdict{false, m, -1};
    }
  }
  for (int w = 0; w < problem.num_women(); ++w) {
    if (marriage_rank(problem.women_prefs[w], mu.husband[w]) >
        marriage_rank(problem.women_prefs[w], -1)) {
      return StabilityVerdict{false, -1, w};
    }
  }
  for (int m = 0; m < problem.num_men(); ++m) {
    for (int w = 0; w < problem.num_women(); ++w) {
      if (mu.wife[m] == w) continue;
      const bool man_wants =
          marriage_rank(problem.men_prefs[m], w) <
          marriage_rank(problem.men_prefs[m], mu.wife[m]);
      const bool woman_wants =
          marriage_rank(problem.women_prefs[w], m) <
          marriage_rank(problem.women_prefs[w], mu.husband[w]);
      if (man_wants && woman_wants) return StabilityVerdict{false, m, w};
    }
  }
  return StabilityVerdict{};
}

std::vector<Matching> all_matchings(int num_men, int num_women, bool pure) {
  if (num_men > kMaxMarriageSide || num_women > kMaxMarriageSide) {
    throw CapExceeded("matching enumeration capped at " +
                      std::to_string(kMaxMarriageSide) + " per side");
  }
  if (pure && num_men != num_women) {
    throw InputError("perfect matchings need equal sides");
  }
  std::vector<Matching> out;
  std::vector<int> wife(num_men, -1);
  std::vector<bool> taken(num_women, false);
  auto recurse = [&](auto& self, int m) -> void {
    if (m == num_men) {
      out.push_back(matching_from_wives(wife, num_women));
      return;
    }
    if (!pure) {
      wife[m] = -1;
      self(self, m + 1);
    }
    for (int w = 0; w < num_women; ++w) {
      if (taken[w]) continue;
      taken[w] = true;
      wife[m] = w;
      self(self, m + 1);
      taken[w] = false;
    }
    wife[m] = -1;
  };
  recurse(recurse, 0);
  return out;
}

std::vector<Matching> enumerate_stable_matchings(
    const MarriageProblem& problem) {
  problem.validate();
  std::vector<Matching> out;
  for (Matching& mu :
       all_matchings(problem.num_men(), problem.num_women(), problem.pure)) {
    if (is_stable(problem, mu).ok) out.push_back(std::move(mu));
  }
  return out;
}

Profile extend_marriage_preferences(const MarriageProblem& problem,
                                    const std::vector<Matching>& matchings) {
  problem.validate();
  Profile profile;
  profile.id = problem.id;
  for (int m = 0; m < problem.num_men(); ++m) {
    std::vector<int> ranks;
    for (const Matching& mu : matchings) {
      ranks.push_back(marriage_rank(problem.men_prefs[m], mu.wife[m]));
    }
    profile.prefs.emplace_back(std::move(ranks));
  }
  for (int w = 0; w < problem.num_women(); ++w) {
    std::vector<int> ranks;
    for (const Matching& mu : matchings) {
      ranks.push_back(marriage_rank(problem.women_prefs[w], mu.husband[w]));
    }
    profile.prefs.emplace_back(std::move(ranks));
  }
  return profile;
}

MarriageScr marriage_optimal_scr(const std::vector<MarriageProblem>& domain) {
  if (domain.empty()) throw InputError("empty marriage domain");
  const MarriageProblem& first = domain.front();
  for (const auto& p : domain) {
    p.validate();
    if (p.men != first.men || p.women != first.women || p.pure != first.pure) {
      throw InputError("marriage problems in a domain must share agents");
    }
  }
  MarriageScr out;
  out.matchings = all_matchings(first.num_men(), first.num_women(), first.pure);
  SocialChoiceRule& f = out.scr;
  f.num_agents = first.num_men() + first.num_women();
  for (const Matching& mu : out.matchings) {
    std::string id = "(";
    for (int m = 0; m < first.num_men(); ++m) {
      if (m > 0) id += ",";
      id += first.men[m] + ":" +
            (mu.wife[m] < 0 ? std::string("-") : first.women[mu.wife[m]]);
    }
    id += ")";
    f.alternatives.push_back(Alternative{id, id});
  }
  for (std::size_t k = 0; k < domain.size(); ++k) {
    Profile profile = extend_marriage_preferences(domain[k], out.matchings);
    profile.id = profile_id(domain[k].id, static_cast<int>(k));
    f.domain.push_back(std::move(profile));
    const Matching men = deferred_acceptance(domain[k], Side::kMen);
    const Matching women = deferred_acceptance(domain[k], Side::kWomen);
    const std::vector<int> ordered =
        indices_in(out.matchings, std::vector<Matching>{women, men});
    f.choices.push_back(make_alt_set(ordered));
    out.orderings.push_back(
        ordered[0] == ordered[1] ? std::vector<int>{ordered[0]} : ordered);
  }
  f.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Housing with ownership.

void Economy::validate() const {
  if (num_agents < 1) throw InputError("economy needs at least one agent");
  if (num_agents > kMaxEconomyAgents || num_houses() > kMaxEconomyHouses) {
    throw CapExceeded("economies are capped at " +
                      std::to_string(kMaxEconomyAgents) + " agents and " +
                      std::to_string(kMaxEconomyHouses) + " houses");
  }
  if (static_cast<int>(owners.size()) != num_houses()) {
    throw InputError("need an owner group per house");
  }
  for (const auto& group : owners) {
    if (group.empty()) throw InputError("every house needs an owner");
    for (int i : group) {
      if (i < 0 || i >= num_agents) throw InputError("owner out of range");
    }
  }
  if (static_cast<int>(orders.size()) != num_agents) {
    throw InputError("need one order per agent");
  }
  for (const auto& order : orders) {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(num_houses() + 1);
    std::iota(expected.begin(), expected.end(), -1);
    if (sorted != expected) {
      throw InputError(
          "each agent must rank every house and holding nothing once");
    }
  }
}

int Economy::rank(int agent, int house) const {
  const auto& order = orders.at(agent);
  return static_cast<int>(std::find(order.begin(), order.end(), house) -
                          order.begin());
}

std::vector<Allocation> all_house_allocations(int num_agents,
                                              int num_houses) {
  if (num_agents > kMaxEconomyAgents || num_houses > kMaxEconomyHouses) {
    throw CapExceeded("house allocation enumeration exceeds its cap");
  }
  std::vector<Allocation> out;
  Allocation x(num_agents, kNoHouse);
  std::vector<bool> taken(num_houses, false);
  auto recurse = [&](auto& self, int i) -> void {
    if (i == num_agents) {
      out.push_back(x);
      return;
    }
    x[i] = kNoHouse;
    self(self, i + 1);
    for (int h = 0; h < num_houses; ++h) {
      if (taken[h]) continue;
      taken[h] = true;
      x[i] = h;
      self(self, i + 1);
      taken[h] = false;
    }
    x[i] = kNoHouse;
  };
  recurse(recurse, 0);
  return out;
}

std::vector<int> houses_controlled(const Economy& economy, Coalition k) {
  std::vector<int> out;
  for (int h = 0; h < economy.num_houses(); ++h) {
    const auto& group = economy.owners[h];
    if (std::all_of(group.begin(), group.end(),
                    [&](int i) { return k.contains(i); })) {
      out.push_back(h);
    }
  }
  return out;
}

Profile extend_economy_preferences(const Economy& economy,
                                   const std::vector<Allocation>& allocations) {
  economy.validate();
  Profile profile;
  profile.id = economy.id;
  for (int i = 0; i < economy.num_agents; ++i) {
    std::vector<int> ranks;
    for (const Allocation& x : allocations) {
      ranks.push_back(economy.rank(i, x[i]));
    }
    profile.prefs.emplace_back(std::move(ranks));
  }
  return profile;
}

namespace {

// Every agent outside K made worse off lost a house controlled by K.
bool harms_only_excluded(const Economy& economy, const Allocation& mu,
                         const Allocation& sigma, Coalition k,
                         const std::vector<bool>& controlled) {
  for (int j = 0; j < economy.num_agents; ++j) {
    if (k.contains(j)) continue;
    if (economy.rank(j, sigma[j]) > economy.rank(j, mu[j]) &&
        (mu[j] == kNoHouse || !controlled[mu[j]])) {
      return false;
    }
  }
  return true;
}

}  // namespace

RightsStructure exclusion_rights_structure(const Economy& economy) {
  economy.validate();
  const std::vector<Allocation> all =
      all_house_allocations(economy.num_agents, economy.num_houses());
  RightsStructure rights;
  for (std::size_t s = 0; s < all.size(); ++s) {
    rights.add_state(State{allocation_id(all[s], economy.houses), StateKind::kOpaque,
                           static_cast<int>(s), -1});
  }
  const std::uint32_t full = (1u << economy.num_agents) - 1u;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const Coalition k = Coalition::FromMask(mask);
    std::vector<bool> controlled(economy.num_houses(), false);
    for (int h : houses_controlled(economy, k)) controlled[h] = true;
    for (std::size_t s = 0; s < all.size(); ++s) {
      for (std::size_t t = 0; t < all.size(); ++t) {
        if (s != t && harms_only_excluded(economy, all[s], all[t], k,
                                          controlled)) {
          rights.grant(static_cast<int>(s), static_cast<int>(t), k);
        }
      }
    }
  }
  return rights;
}

std::vector<Allocation> direct_exclusion_core(const Economy& economy) {
  economy.validate();
  const std::vector<Allocation> all =
      all_house_allocations(economy.num_agents, economy.num_houses());
  const std::uint32_t full = (1u << economy.num_agents) - 1u;
  std::vector<Allocation> core;
  for (const Allocation& mu : all) {
    bool blocked = false;
    for (std::uint32_t mask = 1; mask <= full && !blocked; ++mask) {
      const Coalition k = Coalition::FromMask(mask);
      std::vector<bool> controlled(economy.num_houses(), false);
      for (int h : houses_controlled(economy, k)) controlled[h] = true;
      for (const Allocation& sigma : all) {
        bool improves = true;
        for (int i : k.members()) {
          if (economy.rank(i, sigma[i]) >= economy.rank(i, mu[i])) {
            improves = false;
            break;
          }
        }
        if (improves &&
            harms_only_excluded(economy, mu, sigma, k, controlled)) {
          blocked = true;
          break;
        }
      }
    }
    if (!blocked) core.push_back(mu);
  }
  return core;
}

EconomyScr exclusion_core_scr(const std::vector<Economy>& domain) {
  if (domain.empty()) throw InputError("empty economy domain");
  const Economy& first = domain.front();
  for (const Economy& e : domain) {
    e.validate();
    if (e.num_agents != first.num_agents || e.houses != first.houses ||
        e.owners != first.owners) {
      throw InputError("economies in a domain must share agents and owners");
    }
  }
  EconomyScr out;
  out.allocations =
      all_house_allocations(first.num_agents, first.num_houses());
  SocialChoiceRule& f = out.scr;
  f.num_agents = first.num_agents;
  for (const Allocation& x : out.allocations) {
    const std::string id = allocation_id(x, first.houses);
    f.alternatives.push_back(Alternative{id, id});
  }
  for (std::size_t k = 0; k < domain.size(); ++k) {
    Profile profile = extend_economy_preferences(domain[k], out.allocations);
    profile.id = profile_id(domain[k].id, static_cast<int>(k));
    f.domain.push_back(std::move(profile));
    const auto core = direct_exclusion_core(domain[k]);
    if (core.empty()) {
      throw InputError("empty exclusion core at economy '" +
                       f.domain.back().id + "'");
    }
    f.choices.push_back(make_alt_set(indices_in(out.allocations, core)));
  }
  f.validate();
  return out;
}

}  // namespace rotakit
