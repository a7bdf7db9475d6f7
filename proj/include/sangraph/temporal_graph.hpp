#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sangraph/date.hpp"
#include "sangraph/errors.hpp"
#include "sangraph/events.hpp"

namespace sangraph {

enum class Role { Intermediate, Final };

std::string_view role_name(Role r);
Role role_from_name(std::string_view name);  // throws InvalidParams

// A country qualified by role. The same country code yields two distinct
// nodes, one per role; the two node sets never mix.
struct RoleNode {
  std::string country;
  Role role;
  auto operator<=>(const RoleNode&) const = default;
};

// A designation life-cycle as a directed temporal edge intermediate -> final,
// active on the half-open interval [t_add, t_remove).
struct TemporalEdge {
  std::string key;
  std::string u_country;  // intermediate side
  std::string v_country;  // final side
  Date t_add;
  std::optional<Date> t_remove;  // nullopt = still in force

  bool active_at(Date t) const {
    return t_add <= t && (!t_remove || t < *t_remove);
  }
};

struct BuildDiagnostics {
  // Edges with t_add == t_remove are never active under the half-open rule.
  std::vector<std::string> never_active_keys;
};

// Immutable after construction; all queries are read-only and thread-safe.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  static TemporalGraph build(const std::vector<Lifecycle>& lifecycles);
  static TemporalGraph build(const std::vector<Lifecycle>& lifecycles,
                             BuildDiagnostics& diagnostics);

  // Sorts by (t_add, key) and indexes. Throws InvalidParams when an edge has
  // t_remove < t_add.
  static TemporalGraph from_edges(std::vector<TemporalEdge> edges);

  bool empty() const { return edges_.empty(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<TemporalEdge>& edges() const { return edges_; }
  const TemporalEdge& edge(std::size_t index) const { return edges_[index]; }
  std::optional<std::size_t> find_edge(std::string_view key) const;

  // Positions into edges() incident to node, ascending by (t_add, key).
  // Returns an empty list for nodes absent from the graph.
  const std::vector<std::size_t>& incident(const RoleNode& node) const;

  // E(t) = { e : t_add(e) <= t < t_remove(e) }.
  std::vector<std::size_t> active_edge_indices(Date t) const;
  std::vector<std::string> active_edges(Date t) const;

  // Active-edge count incident to node at t, multi-edge multiplicity kept.
  int degree(const RoleNode& node, Date t) const;

  std::vector<RoleNode> nodes() const;        // sorted
  std::vector<std::string> countries() const;  // distinct codes, both roles, sorted
  std::optional<Date> min_t_add() const;
  std::optional<Date> max_t_add() const;

  // Edge list export: edge_key,u_country,v_country,t_add,t_remove
  // (t_remove empty for open edges). Deterministic byte-for-byte.
  void write_edge_list(std::ostream& out) const;

 private:
  void index_edges();

  std::vector<TemporalEdge> edges_;  // sorted by (t_add, key)
  std::map<RoleNode, std::vector<std::size_t>> incident_;
  std::map<std::string, std::size_t, std::less<>> key_index_;
};

}  // namespace sangraph
