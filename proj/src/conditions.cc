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

#include "rotakit/conditions.h"

#include <algorithm>
#include <deque>
#include <vector>

namespace rotakit {
namespace {

bool some_agent_prefers(const Profile& p, AltIndex x, AltIndex y) {
  for (const Preference& pref : p.prefs) {
    if (pref.prefers(x, y)) return true;
  }
  return false;
}

// Preference reversals between R and R' at the alternatives of F(R).
class ReversalTable {
 public:
  ReversalTable(const SocialChoiceRule& f, int r, int r_prime)
      : r_prime_(&f.domain[r_prime]),
        dense_(f.num_alternatives(), -1),
        by_agent_(f.num_agents) {
    const AltSet& chosen = f.at(r);
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      dense_[chosen[k]] = static_cast<int>(k);
    }
    any_.assign(chosen.size(), false);
    for (int a = 0; a < f.num_agents; ++a) {
      by_agent_[a].assign(chosen.size(), false);
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        if (has_preference_reversal(f.domain[r], f.domain[r_prime], a,
                                    chosen[k])) {
          by_agent_[a][k] = true;
          any_[k] = true;
        }
      }
    }
  }

  bool any(AltIndex x) const { return any_[dense_[x]]; }
  bool by(int agent, AltIndex x) const { return by_agent_[agent][dense_[x]]; }
  // Some agent strictly prefers y to x at R'.
  bool step(AltIndex x, AltIndex y) const {
    return some_agent_prefers(*r_prime_, y, x);
  }
  bool step_with_reversal(AltIndex x, AltIndex y) const {
    for (int a = 0; a < static_cast<int>(by_agent_.size()); ++a) {
      if (r_prime_->prefs[a].prefers(y, x) && by(a, y)) return true;
    }
    return false;
  }

 private:
  const Profile* r_prime_;
  std::vector<int> dense_;
  std::vector<bool> any_;
  std::vector<std::vector<bool>> by_agent_;
};

bool conclusion_holds(const ReversalTable& table,
                      const std::vector<AltIndex>& x, int i,
                      ChainReading reading) {
  const int m = static_cast<int>(x.size());
  auto at = [&](int k) { return x[(i + k) % m]; };
  if (reading == ChainReading::kReversalAtEndpoint) {
    for (int k = 0; k < m; ++k) {
      if (table.any(at(k))) return true;
      if (!table.step(at(k), at(k + 1))) return false;
    }
    return false;
  }
  for (int h = 1; h <= m; ++h) {
    if (table.step_with_reversal(at(h - 1), at(h))) return true;
    if (!table.step(at(h - 1), at(h))) return false;
  }
  return false;
}

OrderingCheck check_rotation(const std::vector<ReversalTable>& tables,
                             const std::vector<int>& triggered,
                             const std::vector<AltIndex>& ordering,
                             ChainReading reading) {
  for (std::size_t t = 0; t < triggered.size(); ++t) {
    for (int i = 0; i < static_cast<int>(ordering.size()); ++i) {
      if (!conclusion_holds(tables[t], ordering, i, reading)) {
        return OrderingCheck{false, triggered[t], i};
      }
    }
  }
  return OrderingCheck{};
}

OrderingCheck check_property_m_one(const SocialChoiceRule& f,
                                   const std::vector<ReversalTable>& tables,
                                   const std::vector<int>& singles,
                                   const std::vector<AltIndex>& x,
                                   ChainReading reading) {
  const int m = static_cast<int>(x.size());
  for (std::size_t t = 0; t < singles.size(); ++t) {
    const int rp = singles[t];
    const ReversalTable& table = tables[t];
    const AltIndex target = f.at(rp).front();
    const int k = static_cast<int>(
        std::find(x.begin(), x.end(), target) - x.begin());
    std::vector<int> failing;
    for (int j = 0; j < m; ++j) {
      if (j != k && !conclusion_holds(table, x, j, reading)) {
        failing.push_back(j);
      }
    }
    if (failing.empty()) continue;
    // x(k) must be stuck at R': no reversal there and x(k + 1) not
    // preferred by anyone.
    const AltIndex next = x[(k + 1) % m];
    if (table.any(target) || (next != target && table.step(target, next))) {
      return OrderingCheck{false, rp, k};
    }
    for (int j : failing) {
      for (int pos = j; pos % m != k; ++pos) {
        if (!table.step(x[pos % m], x[(pos + 1) % m])) {
          return OrderingCheck{false, rp, j};
        }
      }
    }
  }
  return OrderingCheck{};
}

std::vector<int> triggered_profiles(const SocialChoiceRule& f, int r) {
  std::vector<int> out;
  for (int rp = 0; rp < f.num_profiles(); ++rp) {
    if (rotation_triggered(f, r, rp)) out.push_back(rp);
  }
  return out;
}

std::vector<int> property_m_profiles(const SocialChoiceRule& f, int r) {
  std::vector<int> out;
  for (int rp = 0; rp < f.num_profiles(); ++rp) {
    if (f.at(r) == f.at(rp) || f.at(rp).size() != 1) continue;
    if (f.chooses(r, f.at(rp).front())) out.push_back(rp);
  }
  return out;
}

std::vector<ReversalTable> tables_for(const SocialChoiceRule& f, int r,
                                      const std::vector<int>& others) {
  std::vector<ReversalTable> out;
  out.reserve(others.size());
  for (int rp : others) out.emplace_back(f, r, rp);
  return out;
}

// Calls visit(ordering) for each circular ordering of F(R) with the first
// element fixed, in lexicographic order, until visit returns true.
template <typename Visit>
void for_each_ordering(const AltSet& chosen, Visit visit) {
  std::vector<AltIndex> ordering = chosen;
  do {
    if (visit(ordering)) return;
  } while (ordering.size() > 1 &&
           std::next_permutation(ordering.begin() + 1, ordering.end()));
}

}  // namespace

MaskinVerdict check_maskin_monotonicity(const SocialChoiceRule& f) {
  f.validate();
  for (int r = 0; r < f.num_profiles(); ++r) {
    for (int rp = 0; rp < f.num_profiles(); ++rp) {
      if (r == rp) continue;
      for (AltIndex z : f.at(r)) {
        if (!f.chooses(rp, z) &&
            is_monotonic_transformation(f.domain[r], f.domain[rp], z)) {
          return MaskinVerdict{false, r, rp, z};
        }
      }
    }
  }
  return MaskinVerdict{};
}

IndirectVerdict check_indirect_monotonicity(const SocialChoiceRule& f) {
  f.validate();
  IndirectVerdict verdict;
  for (int r = 0; r < f.num_profiles(); ++r) {
    const AltSet& chosen = f.at(r);
    for (int rp = 0; rp < f.num_profiles(); ++rp) {
      if (r == rp) continue;
      const Profile& prime = f.domain[rp];
      for (AltIndex z : chosen) {
        if (f.chooses(rp, z) ||
            !is_monotonic_transformation(f.domain[r], prime, z)) {
          continue;
        }
        // BFS inside F(R) along strict R'-improvements.
        std::vector<AltIndex> parent(f.num_alternatives(), -2);
        parent[z] = -1;
        std::deque<AltIndex> queue{z};
        AltIndex end = -1;
        while (!queue.empty() && end < 0) {
          const AltIndex a = queue.front();
          queue.pop_front();
          for (AltIndex b : chosen) {
            if (parent[b] != -2 || !some_agent_prefers(prime, b, a)) continue;
            parent[b] = a;
            if (!is_monotonic_transformation(f.domain[r], prime, b)) {
              end = b;
              break;
            }
            queue.push_back(b);
          }
        }
        if (end < 0) {
          verdict.ok = false;
          verdict.profile = r;
          verdict.profile_prime = rp;
          verdict.z = z;
          return verdict;
        }
        IndirectWitness w{r, rp, z, {}, {}, -1};
        for (AltIndex a = end; a != -1; a = parent[a]) w.chain.push_back(a);
        std::reverse(w.chain.begin(), w.chain.end());
        for (std::size_t k = 0; k + 1 < w.chain.size(); ++k) {
          for (int i = 0; i < f.num_agents; ++i) {
            if (prime.prefs[i].prefers(w.chain[k + 1], w.chain[k])) {
              w.agents.push_back(i);
              break;
            }
          }
        }
        for (int i = 0; i < f.num_agents; ++i) {
          if (has_preference_reversal(f.domain[r], prime, i, end)) {
            w.reversal_agent = i;
            break;
          }
        }
        verdict.witnesses.push_back(std::move(w));
      }
    }
  }
  return verdict;
}

bool rotation_triggered(const SocialChoiceRule& f, int r, int r_prime) {
  const AltSet& a = f.at(r);
  const AltSet& b = f.at(r_prime);
  if (a == b) return false;
  if (b.size() > 1) return true;
  return !f.chooses(r, b.front());
}

void validate_ordering(const SocialChoiceRule& f, int r,
                       const std::vector<AltIndex>& ordering) {
  if (make_alt_set(ordering) != f.at(r) || ordering.size() != f.at(r).size()) {
    throw InputError("ordering for profile '" + f.domain.at(r).id +
                     "' must list each chosen alternative exactly once");
  }
}

bool rotation_conclusion_holds(const SocialChoiceRule& f, int r, int r_prime,
                               const std::vector<AltIndex>& ordering,
                               int position, ChainReading reading) {
  validate_ordering(f, r, ordering);
  if (position < 0 || position >= static_cast<int>(ordering.size())) {
    throw InputError("ordering position out of range");
  }
  return conclusion_holds(ReversalTable(f, r, r_prime), ordering, position,
                          reading);
}

OrderingCheck evaluate_rotation_ordering(const SocialChoiceRule& f, int r,
                                         const std::vector<AltIndex>& ordering,
                                         ChainReading reading) {
  validate_ordering(f, r, ordering);
  const std::vector<int> triggered = triggered_profiles(f, r);
  return check_rotation(tables_for(f, r, triggered), triggered,
                        ordering, reading);
}

OrderingCheck evaluate_property_m(const SocialChoiceRule& f, int r,
                                  const std::vector<AltIndex>& ordering,
                                  ChainReading reading) {
  validate_ordering(f, r, ordering);
  const std::vector<int> singles = property_m_profiles(f, r);
  return check_property_m_one(f, tables_for(f, r, singles), singles,
                              ordering, reading);
}

RotationMonotonicityVerdict check_rotation_monotonicity(
    const SocialChoiceRule& f, const OrderingOptions& options) {
  f.validate();
  RotationMonotonicityVerdict verdict;
  bool truncated = false;
  bool violated = false;
  for (int r = 0; r < f.num_profiles(); ++r) {
    ProfileOrderings result;
    result.profile = r;
    const AltSet& chosen = f.at(r);
    if (static_cast<int>(chosen.size()) > options.cap) {
      result.status = SearchStatus::kTruncated;
      truncated = true;
      verdict.profiles.push_back(std::move(result));
      continue;
    }
    const std::vector<int> triggered = triggered_profiles(f, r);
    const std::vector<ReversalTable> tables = tables_for(f, r, triggered);
    std::vector<OrderingFailure> failures;
    for_each_ordering(chosen, [&](const std::vector<AltIndex>& ordering) {
      const OrderingCheck c =
          check_rotation(tables, triggered, ordering, options.reading);
      if (c.ok) {
        result.passing.push_back(ordering);
      } else {
        failures.push_back(
            OrderingFailure{ordering, c.profile_prime, c.position});
      }
      return false;
    });
    if (result.passing.empty()) {
      result.status = SearchStatus::kNone;
      result.failures = std::move(failures);
      violated = true;
    }
    verdict.profiles.push_back(std::move(result));
  }
  verdict.status = violated    ? SearchStatus::kNone
                   : truncated ? SearchStatus::kTruncated
                               : SearchStatus::kFound;
  return verdict;
}

PropertyMVerdict check_property_m(const SocialChoiceRule& f,
                                  const OrderingWitness& orderings,
                                  ChainReading reading) {
  f.validate();
  if (static_cast<int>(orderings.size()) != f.num_profiles()) {
    throw InputError("need one ordering per profile");
  }
  for (int r = 0; r < f.num_profiles(); ++r) {
    const OrderingCheck c = evaluate_property_m(f, r, orderings[r], reading);
    if (!c.ok) return PropertyMVerdict{false, r, c.profile_prime, c.position};
  }
  return PropertyMVerdict{};
}

SharedOrderingResult find_shared_ordering(const SocialChoiceRule& f,
                                          const OrderingOptions& options) {
  f.validate();
  SharedOrderingResult result;
  bool truncated = false;
  for (int r = 0; r < f.num_profiles(); ++r) {
    const AltSet& chosen = f.at(r);
    if (static_cast<int>(chosen.size()) > options.cap) {
      truncated = true;
      result.orderings.emplace_back();
      continue;
    }
    const std::vector<int> triggered = triggered_profiles(f, r);
    const std::vector<ReversalTable> rot = tables_for(f, r, triggered);
    const std::vector<int> singles = property_m_profiles(f, r);
    const std::vector<ReversalTable> pm = tables_for(f, r, singles);
    std::vector<AltIndex> found;
    for_each_ordering(chosen, [&](const std::vector<AltIndex>& ordering) {
      if (check_rotation(rot, triggered, ordering, options.reading)
              .ok &&
          check_property_m_one(f, pm, singles, ordering, options.reading)
              .ok) {
        found = ordering;
        return true;
      }
      return false;
    });
    if (found.empty()) {
      result.status = SearchStatus::kNone;
      result.failing_profile = r;
      result.orderings.clear();
      return result;
    }
    result.orderings.push_back(std::move(found));
  }
  if (truncated) result.status = SearchStatus::kTruncated;
  return result;
}

bool same_circular_order(const std::vector<AltIndex>& a,
                         const std::vector<AltIndex>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  const std::size_t offset = it - b.begin();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[(offset + k) % b.size()]) return false;
  }
  return true;
}

}  // namespace rotakit
