#include "sangraph/temporal_graph.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "sangraph/csv.hpp"

namespace sangraph {

std::string_view role_name(Role r) {
  return r == Role::Intermediate ? "intermediate" : "final";
}

Role role_from_name(std::string_view name) {
  if (name == "intermediate" || name == "int") return Role::Intermediate;
  if (name == "final" || name == "fin") return Role::Final;
  throw InvalidParams("unknown role: \"" + std::string(name) + "\"");
}

TemporalGraph TemporalGraph::build(const std::vector<Lifecycle>& lifecycles) {
  BuildDiagnostics ignored;
  return build(lifecycles, ignored);
}

TemporalGraph TemporalGraph::build(const std::vector<Lifecycle>& lifecycles,
                                   BuildDiagnostics& diagnostics) {
  std::vector<TemporalEdge> edges;
  edges.reserve(lifecycles.size());
  for (const Lifecycle& lc : lifecycles) {
    edges.push_back({lc.edge_key, lc.intermediate, lc.final_target, lc.t_add, lc.t_remove});
  }
  TemporalGraph g = from_edges(std::move(edges));
  for (const TemporalEdge& e : g.edges_) {
    if (e.t_remove && *e.t_remove == e.t_add) diagnostics.never_active_keys.push_back(e.key);
  }
  return g;
}

TemporalGraph TemporalGraph::from_edges(std::vector<TemporalEdge> edges) {
  for (const TemporalEdge& e : edges) {
    if (e.t_remove && *e.t_remove < e.t_add) {
      throw InvalidParams("edge \"" + e.key + "\" has t_remove before t_add");
    }
  }
  TemporalGraph g;
  g.edges_ = std::move(edges);
  std::sort(g.edges_.begin(), g.edges_.end(), [](const TemporalEdge& a, const TemporalEdge& b) {
    if (a.t_add != b.t_add) return a.t_add < b.t_add;
    return a.key < b.key;
  });
  g.index_edges();
  return g;
}

void TemporalGraph::index_edges() {
  incident_.clear();
  key_index_.clear();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const TemporalEdge& e = edges_[i];
    incident_[RoleNode{e.u_country, Role::Intermediate}].push_back(i);
    incident_[RoleNode{e.v_country, Role::Final}].push_back(i);
    if (!key_index_.emplace(e.key, i).second) {
      throw InvalidParams("duplicate edge key: \"" + e.key + "\"");
    }
  }
}

std::optional<std::size_t> TemporalGraph::find_edge(std::string_view key) const {
  auto it = key_index_.find(key);
  if (it == key_index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& TemporalGraph::incident(const RoleNode& node) const {
  static const std::vector<std::size_t> empty;
  auto it = incident_.find(node);
  return it == incident_.end() ? empty : it->second;
}

std::vector<std::size_t> TemporalGraph::active_edge_indices(Date t) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].active_at(t)) out.push_back(i);
  }
  return out;
}

std::vector<std::string> TemporalGraph::active_edges(Date t) const {
  std::vector<std::string> keys;
  for (std::size_t i : active_edge_indices(t)) keys.push_back(edges_[i].key);
  return keys;
}

int TemporalGraph::degree(const RoleNode& node, Date t) const {
  int deg = 0;
  for (std::size_t i : incident(node)) {
    if (edges_[i].active_at(t)) ++deg;
  }
  return deg;
}

std::vector<RoleNode> TemporalGraph::nodes() const {
  std::vector<RoleNode> out;
  out.reserve(incident_.size());
  for (const auto& [node, positions] : incident_) out.push_back(node);
  return out;
}

std::vector<std::string> TemporalGraph::countries() const {
  std::set<std::string> codes;
  for (const auto& [node, positions] : incident_) codes.insert(node.country);
  return {codes.begin(), codes.end()};
}

std::optional<Date> TemporalGraph::min_t_add() const {
  if (edges_.empty()) return std::nullopt;
  return edges_.front().t_add;  // sorted by t_add
}

std::optional<Date> TemporalGraph::max_t_add() const {
  if (edges_.empty()) return std::nullopt;
  return edges_.back().t_add;
}

void TemporalGraph::write_edge_list(std::ostream& out) const {
  csv::write_row(out, {"edge_key", "u_country", "v_country", "t_add", "t_remove"});
  for (const TemporalEdge& e : edges_) {
    csv::write_row(out, {e.key, e.u_country, e.v_country, e.t_add.to_string(),
                         e.t_remove ? e.t_remove->to_string() : std::string()});
  }
}

}  // namespace sangraph
