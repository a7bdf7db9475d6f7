#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "sangraph/rng.hpp"
#include "sangraph/temporal_graph.hpp"
#include "support.hpp"

using namespace sangraph;
using namespace testsupport;

namespace {

Lifecycle lc(std::string key, std::string intermediate, std::string final_target, const char* add,
             const char* remove = nullptr) {
  Lifecycle l;
  l.edge_key = std::move(key);
  l.entity_name = "entity";
  l.intermediate = std::move(intermediate);
  l.final_target = std::move(final_target);
  l.t_add = Date::parse(add);
  if (remove) l.t_remove = Date::parse(remove);
  return l;
}

TemporalGraph random_graph(int n, std::uint64_t seed) {
  const std::vector<std::string> codes = {"CN", "RU", "IR", "SG", "AE", "DE", "PK", "TR"};
  SplitMix64 rng(seed);
  std::vector<TemporalEdge> edges;
  const Date base = Date::parse("2005-01-01");
  for (int i = 0; i < n; ++i) {
    TemporalEdge e;
    e.key = "R" + std::to_string(i);
    e.u_country = codes[rng.bounded(codes.size())];
    e.v_country = codes[rng.bounded(codes.size())];
    e.t_add = base.plus_days(static_cast<int>(rng.bounded(7000)));
    if (rng.bounded(3) == 0) e.t_remove = e.t_add.plus_days(static_cast<int>(rng.bounded(2000)));
    edges.push_back(std::move(e));
  }
  return TemporalGraph::from_edges(std::move(edges));
}

}  // namespace

TEST_CASE("build keeps one edge per life-cycle and role-distinct nodes") {
  const TemporalGraph g = TemporalGraph::build({
      lc("L1", "CN", "IR", "2010-01-01"),
      lc("L2", "CN", "CN", "2011-01-01"),
  });
  CHECK(g.edge_count() == 2);
  const auto nodes = g.nodes();
  REQUIRE(nodes.size() == 3);  // CN^int, CN^fin, IR^fin
  CHECK(std::count_if(nodes.begin(), nodes.end(),
                      [](const RoleNode& n) { return n.country == "CN"; }) == 2);
  CHECK(g.countries() == std::vector<std::string>{"CN", "IR"});

  CHECK(TemporalGraph::build({}).empty());
}

TEST_CASE("bipartite typing: every edge runs intermediate to final") {
  const TemporalGraph g = random_graph(50, 7);
  for (const TemporalEdge& e : g.edges()) {
    CHECK(!g.incident(RoleNode{e.u_country, Role::Intermediate}).empty());
    CHECK(!g.incident(RoleNode{e.v_country, Role::Final}).empty());
  }
}

TEST_CASE("activity interval is half-open") {
  const TemporalGraph g = graph_of({edge("L1", "CN", "IR", "2010-01-01", "2012-06-01")});
  CHECK(g.active_edges(Date::parse("2010-01-01")).size() == 1);  // closed lower bound
  CHECK(g.active_edges(Date::parse("2012-05-31")).size() == 1);
  CHECK(g.active_edges(Date::parse("2012-06-01")).empty());  // strict upper bound
  CHECK(g.active_edges(Date::parse("2009-12-31")).empty());

  const TemporalGraph open_edge = graph_of({edge("L1", "CN", "IR", "2010-01-01")});
  CHECK(open_edge.active_edges(Date::parse("2030-01-01")).size() == 1);
}

TEST_CASE("same-day add and remove is never active and is flagged") {
  BuildDiagnostics diag;
  const TemporalGraph g = TemporalGraph::build(
      {lc("L1", "CN", "IR", "2010-01-01", "2010-01-01"), lc("L2", "CN", "IR", "2010-01-01")},
      diag);
  CHECK(diag.never_active_keys == std::vector<std::string>{"L1"});
  CHECK(g.degree(RoleNode{"CN", Role::Intermediate}, Date::parse("2010-01-01")) == 1);
}

TEST_CASE("active edges match a brute-force filter on random graphs") {
  const TemporalGraph g = random_graph(100, 3);
  SplitMix64 rng(11);
  const Date base = Date::parse("2004-01-01");
  for (int trial = 0; trial < 40; ++trial) {
    const Date t = base.plus_days(static_cast<int>(rng.bounded(9000)));
    const auto keys = g.active_edges(t);
    const std::set<std::string> got(keys.begin(), keys.end());
    CHECK(got == oracle_active_keys(g, t));
  }
}

TEST_CASE("degree counts multiplicity and respects life-cycles") {
  const TemporalGraph g = graph_of({
      edge("L1", "CN", "IR", "2010-01-01"),
      edge("L2", "CN", "IR", "2010-06-01"),
      edge("L3", "CN", "IR", "2011-01-01", "2012-01-01"),
  });
  const RoleNode cn_int{"CN", Role::Intermediate};
  CHECK(g.degree(RoleNode{"ZZ", Role::Final}, Date::parse("2011-06-01")) == 0);
  CHECK(g.degree(cn_int, Date::parse("2011-06-01")) == 3);
  // After L3 is removed the degree reverts to its pre-add value.
  CHECK(g.degree(cn_int, Date::parse("2010-12-31")) == 2);
  CHECK(g.degree(cn_int, Date::parse("2012-01-01")) == 2);
}

TEST_CASE("active count equals the degree sums on both sides") {
  const TemporalGraph g = random_graph(120, 17);
  SplitMix64 rng(5);
  const Date base = Date::parse("2004-01-01");
  for (int trial = 0; trial < 10; ++trial) {
    const Date t = base.plus_days(static_cast<int>(rng.bounded(9000)));
    long long active = static_cast<long long>(g.active_edge_indices(t).size());
    long long int_sum = 0;
    long long fin_sum = 0;
    for (const RoleNode& node : g.nodes()) {
      if (node.role == Role::Intermediate) {
        int_sum += g.degree(node, t);
      } else {
        fin_sum += g.degree(node, t);
      }
    }
    CHECK(active == int_sum);
    CHECK(active == fin_sum);
  }
}

TEST_CASE("degree agrees with the brute-force oracle") {
  const TemporalGraph g = random_graph(80, 23);
  const Date t = Date::parse("2014-07-01");
  for (const RoleNode& node : g.nodes()) {
    CHECK(g.degree(node, t) == oracle_degree(g, node, t));
  }
}

TEST_CASE("builds and exports are deterministic") {
  const std::vector<Lifecycle> cycles = {
      lc("L2", "CN", "IR", "2010-01-01", "2013-01-01"),
      lc("L1", "SG", "CN", "2010-01-01"),
      lc("L3", "AE", "IR", "2009-05-01"),
  };
  const TemporalGraph a = TemporalGraph::build(cycles);
  const TemporalGraph b = TemporalGraph::build(cycles);
  std::ostringstream out_a;
  std::ostringstream out_b;
  a.write_edge_list(out_a);
  b.write_edge_list(out_b);
  CHECK(out_a.str() == out_b.str());
  // Sorted by (t_add, key): L3 first, then L1 before L2.
  CHECK(out_a.str() ==
        "edge_key,u_country,v_country,t_add,t_remove\n"
        "L3,AE,IR,2009-05-01,\n"
        "L1,SG,CN,2010-01-01,\n"
        "L2,CN,IR,2010-01-01,2013-01-01\n");
}

TEST_CASE("adding a life-cycle never disturbs earlier activity") {
  std::vector<Lifecycle> cycles = {lc("L1", "CN", "IR", "2010-01-01", "2012-01-01")};
  const TemporalGraph before = TemporalGraph::build(cycles);
  cycles.push_back(lc("L2", "SG", "CN", "2015-01-01"));
  const TemporalGraph after = TemporalGraph::build(cycles);
  for (const char* when : {"2009-06-01", "2010-01-01", "2011-06-30", "2014-12-31"}) {
    CHECK(before.active_edges(Date::parse(when)) == after.active_edges(Date::parse(when)));
  }
}

TEST_CASE("edge lookup and invalid intervals") {
  const TemporalGraph g = graph_of({edge("L1", "CN", "IR", "2010-01-01")});
  CHECK(g.find_edge("L1").has_value());
  CHECK(!g.find_edge("L9").has_value());

  std::vector<TemporalEdge> bad = {edge("B1", "CN", "IR", "2010-01-01")};
  bad[0].t_remove = Date::parse("2009-01-01");
  CHECK_THROWS_AS(TemporalGraph::from_edges(std::move(bad)), InvalidParams);

  std::vector<TemporalEdge> duplicated = {edge("K1", "CN", "IR", "2010-01-01"),
                                          edge("K1", "SG", "RU", "2011-01-01")};
  CHECK_THROWS_AS(TemporalGraph::from_edges(std::move(duplicated)), InvalidParams);
}
