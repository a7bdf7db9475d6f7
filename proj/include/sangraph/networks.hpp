#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sangraph/temporal_graph.hpp"

namespace sangraph {

// ActiveAt counts designations in force at t; CumulativeThrough counts every
// designation added up to and including t, removed or not.
enum class Coverage { ActiveAt, CumulativeThrough };

// One-hop star around an anchor role-node with per-member case counts.
struct DetectionNetwork {
  RoleNode anchor;
  Date t;
  std::map<std::string, int> members;  // country code -> case count, all >= 1
};

// Members = final-target countries of qualifying edges whose intermediate
// node is `country`; counts keep multi-edge multiplicity.
DetectionNetwork intermediate_target_network(const TemporalGraph& g,
                                             const std::string& country, Date t,
                                             Coverage coverage = Coverage::ActiveAt);

// Mirror image with roles swapped.
DetectionNetwork final_target_network(const TemporalGraph& g, const std::string& country,
                                      Date t, Coverage coverage = Coverage::ActiveAt);

struct NetworkRow {
  std::string anchor;
  Role role;  // role the anchor plays
  std::string member;
  int case_count = 0;
};

// Rows for both roles of each anchor, members sorted by descending count
// then member code.
std::vector<NetworkRow> network_table(const TemporalGraph& g,
                                      const std::vector<std::string>& countries, Date t,
                                      Coverage coverage = Coverage::ActiveAt);

// CSV: anchor,role,member,case_count,t
void write_network_csv(std::ostream& out, const std::vector<NetworkRow>& rows, Date t);

}  // namespace sangraph
