#include "sangraph/networks.hpp"

#include <algorithm>
#include <ostream>

#include "sangraph/csv.hpp"

namespace sangraph {

namespace {

DetectionNetwork collect(const TemporalGraph& g, const std::string& country, Date t, Role role,
                         Coverage coverage) {
  DetectionNetwork net{RoleNode{country, role}, t, {}};
  for (std::size_t index : g.incident(net.anchor)) {
    const TemporalEdge& e = g.edge(index);
    const bool counted =
        coverage == Coverage::ActiveAt ? e.active_at(t) : e.t_add <= t;
    if (!counted) continue;
    const std::string& member = role == Role::Intermediate ? e.v_country : e.u_country;
    ++net.members[member];
  }
  return net;
}

}  // namespace

DetectionNetwork intermediate_target_network(const TemporalGraph& g, const std::string& country,
                                             Date t, Coverage coverage) {
  return collect(g, country, t, Role::Intermediate, coverage);
}

DetectionNetwork final_target_network(const TemporalGraph& g, const std::string& country, Date t,
                                      Coverage coverage) {
  return collect(g, country, t, Role::Final, coverage);
}

std::vector<NetworkRow> network_table(const TemporalGraph& g,
                                      const std::vector<std::string>& countries, Date t,
                                      Coverage coverage) {
  std::vector<NetworkRow> rows;
  for (const std::string& country : countries) {
    for (Role role : {Role::Intermediate, Role::Final}) {
      const DetectionNetwork net = collect(g, country, t, role, coverage);
      std::vector<std::pair<std::string, int>> members(net.members.begin(), net.members.end());
      std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
      });
      for (const auto& [member, count] : members) {
        rows.push_back({country, role, member, count});
      }
    }
  }
  return rows;
}

void write_network_csv(std::ostream& out, const std::vector<NetworkRow>& rows, Date t) {
  csv::write_row(out, {"anchor", "role", "member", "case_count", "t"});
  const std::string t_text = t.to_string();
  for (const NetworkRow& row : rows) {
    csv::write_row(out, {row.anchor, std::string(role_name(row.role)), row.member,
                         std::to_string(row.case_count), t_text});
  }
}

}  // namespace sangraph
