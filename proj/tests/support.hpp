// Shared fixtures plus independent brute-force oracles. The oracles use
// direct scans over the edge list and their own date arithmetic so they stay
// independent of the indexed implementations they check.
#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sangraph/motifs.hpp"
#include "sangraph/temporal_graph.hpp"

namespace testsupport {

using sangraph::Date;
using sangraph::DateInterval;
using sangraph::MotifParams;
using sangraph::ObservationRule;
using sangraph::Role;
using sangraph::RoleNode;
using sangraph::TemporalEdge;
using sangraph::TemporalGraph;

inline TemporalEdge edge(std::string key, std::string u, std::string v, const char* add,
                         const char* remove = nullptr) {
  TemporalEdge e;
  e.key = std::move(key);
  e.u_country = std::move(u);
  e.v_country = std::move(v);
  e.t_add = Date::parse(add);
  if (remove) e.t_remove = Date::parse(remove);
  return e;
}

inline TemporalGraph graph_of(std::vector<TemporalEdge> edges) {
  return TemporalGraph::from_edges(std::move(edges));
}

inline bool oracle_active(const TemporalEdge& e, Date t) {
  if (t.days() < e.t_add.days()) return false;
  if (e.t_remove && t.days() >= e.t_remove->days()) return false;
  return true;
}

inline std::set<std::string> oracle_active_keys(const TemporalGraph& g, Date t) {
  std::set<std::string> keys;
  for (const TemporalEdge& e : g.edges()) {
    if (oracle_active(e, t)) keys.insert(e.key);
  }
  return keys;
}

inline int oracle_degree(const TemporalGraph& g, const RoleNode& node, Date t) {
  int deg = 0;
  for (const TemporalEdge& e : g.edges()) {
    const std::string& side = node.role == Role::Intermediate ? e.u_country : e.v_country;
    if (side == node.country && oracle_active(e, t)) ++deg;
  }
  return deg;
}

// Quadratic enumeration of qualifying (prior, later) pairs, binned by the
// later edge's add date.
inline std::vector<long long> oracle_motif_counts(const TemporalGraph& g,
                                                  const std::string& country, Role role,
                                                  const MotifParams& params) {
  std::vector<long long> counts(params.bins.size(), 0);
  auto side = [&](const TemporalEdge& e) -> const std::string& {
    return role == Role::Intermediate ? e.u_country : e.v_country;
  };
  for (const TemporalEdge& later : g.edges()) {
    if (side(later) != country) continue;
    int bin = -1;
    for (std::size_t b = 0; b < params.bins.size(); ++b) {
      if (params.bins[b].start <= later.t_add && later.t_add <= params.bins[b].end) {
        bin = static_cast<int>(b);
        break;
      }
    }
    if (bin < 0) continue;
    const Date t_obs = params.observation_rule == ObservationRule::BinEnd
                           ? params.bins[static_cast<std::size_t>(bin)].end
                           : later.t_add;
    if (!oracle_active(later, t_obs)) continue;
    for (const TemporalEdge& prior : g.edges()) {
      if (side(prior) != country) continue;
      const int gap = later.t_add - prior.t_add;
      bool qualifies = false;
      if (gap > 0 && gap <= params.delta_days) {
        qualifies = true;
      } else if (gap == 0 && params.include_same_day && prior.key < later.key) {
        qualifies = true;
      }
      if (qualifies && oracle_active(prior, t_obs)) {
        ++counts[static_cast<std::size_t>(bin)];
      }
    }
  }
  return counts;
}

inline std::map<std::string, int> oracle_network_members(const TemporalGraph& g,
                                                         const std::string& country, Role role,
                                                         Date t) {
  std::map<std::string, int> members;
  for (const TemporalEdge& e : g.edges()) {
    const std::string& anchor_side = role == Role::Intermediate ? e.u_country : e.v_country;
    const std::string& member_side = role == Role::Intermediate ? e.v_country : e.u_country;
    if (anchor_side == country && oracle_active(e, t)) ++members[member_side];
  }
  return members;
}

}  // namespace testsupport
