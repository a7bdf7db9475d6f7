#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "sangraph/null_model.hpp"
#include "sangraph/rng.hpp"
#include "support.hpp"

using namespace sangraph;
using namespace testsupport;

namespace {

TemporalGraph random_graph(int n, std::uint64_t seed, int year_first = 2006, int year_last = 2020) {
  const std::vector<std::string> codes = {"CN", "RU", "IR", "SG", "AE", "DE", "PK", "TR"};
  SplitMix64 rng(seed);
  std::vector<TemporalEdge> edges;
  for (int i = 0; i < n; ++i) {
    TemporalEdge e;
    e.key = "R" + std::to_string(i);
    e.u_country = codes[rng.bounded(codes.size())];
    e.v_country = codes[rng.bounded(codes.size())];
    const int year = static_cast<int>(rng.bounded(
                         static_cast<std::uint64_t>(year_last - year_first + 1))) +
                     year_first;
    e.t_add = Date::year_start(year).plus_days(static_cast<int>(rng.bounded(360)));
    if (rng.bounded(5) == 0) e.t_remove = e.t_add.plus_days(static_cast<int>(rng.bounded(900)) + 1);
    edges.push_back(std::move(e));
  }
  return TemporalGraph::from_edges(std::move(edges));
}

std::multiset<std::pair<std::string, std::string>> pair_multiset(const TemporalGraph& g) {
  std::multiset<std::pair<std::string, std::string>> pairs;
  for (const TemporalEdge& e : g.edges()) pairs.emplace(e.u_country, e.v_country);
  return pairs;
}

std::multiset<std::pair<int, int>> slot_timing_multiset(const TemporalGraph& g) {
  std::multiset<std::pair<int, int>> slots;
  for (const TemporalEdge& e : g.edges()) {
    slots.emplace(e.t_add.days(), e.t_remove ? *e.t_remove - e.t_add : -1);
  }
  return slots;
}

std::map<int, int> per_year_counts(const TemporalGraph& g) {
  std::map<int, int> counts;
  for (const TemporalEdge& e : g.edges()) ++counts[e.t_add.year()];
  return counts;
}

MotifParams default_params() {
  MotifParams p;
  p.delta_days = 1461;
  p.bins = yearly_bins(2000, 2030);  // overridden by term_statistic
  return p;
}

TemporalGraph fig_burst_graph() {
  return graph_of({
      edge("S1", "AA", "ZZ", "2017-03-01"),
      edge("S2", "BB", "ZZ", "2019-06-01"),
      edge("S3", "CC", "ZZ", "2021-01-15"),
      edge("B1", "DD", "ZZ", "2022-06-01"),
      edge("B2", "EE", "ZZ", "2022-06-08"),
      edge("B3", "FF", "ZZ", "2022-06-15"),
      edge("B4", "GG", "ZZ", "2022-06-22"),
  });
}

}  // namespace

TEST_CASE("case shuffle preserves pairs, slot timing and yearly activity") {
  const TemporalGraph g = random_graph(200, 42);
  const auto pairs = pair_multiset(g);
  const auto slots = slot_timing_multiset(g);
  const auto yearly = per_year_counts(g);
  for (std::uint64_t r = 1; r <= 25; ++r) {
    const TemporalGraph shuffled = shuffle_realization(g, 7, r);
    CHECK(shuffled.edge_count() == g.edge_count());
    CHECK(pair_multiset(shuffled) == pairs);
    CHECK(slot_timing_multiset(shuffled) == slots);
    CHECK(per_year_counts(shuffled) == yearly);
    // Slots keep their own timestamps, only pair labels move.
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      CHECK(shuffled.edge(i).key == g.edge(i).key);
      CHECK(shuffled.edge(i).t_add == g.edge(i).t_add);
      CHECK(shuffled.edge(i).t_remove == g.edge(i).t_remove);
    }
  }
}

TEST_CASE("shuffles are deterministic per (seed, replicate) and vary across replicates") {
  const TemporalGraph g = random_graph(120, 9);
  const TemporalGraph a = shuffle_realization(g, 33, 5);
  const TemporalGraph b = shuffle_realization(g, 33, 5);
  std::ostringstream dump_a;
  std::ostringstream dump_b;
  a.write_edge_list(dump_a);
  b.write_edge_list(dump_b);
  CHECK(dump_a.str() == dump_b.str());

  const TemporalGraph c = shuffle_realization(g, 33, 6);
  std::ostringstream dump_c;
  c.write_edge_list(dump_c);
  CHECK(dump_a.str() != dump_c.str());

  CHECK_THROWS_AS(shuffle_realization(TemporalGraph{}, 1, 1), EmptyGraph);
}

TEST_CASE("time shuffle keeps pairs and durations but moves start dates") {
  const TemporalGraph g = random_graph(150, 21);
  const Date lo = *g.min_t_add();
  const Date hi = *g.max_t_add();
  std::multiset<int> durations;
  for (const TemporalEdge& e : g.edges()) {
    if (e.t_remove) durations.insert(*e.t_remove - e.t_add);
  }
  const TemporalGraph shuffled = shuffle_realization(g, 3, 1, NullKind::TimeShuffled);
  CHECK(pair_multiset(shuffled) == pair_multiset(g));
  std::multiset<int> new_durations;
  for (const TemporalEdge& e : shuffled.edges()) {
    CHECK(e.t_add >= lo);
    CHECK(e.t_add <= hi);
    if (e.t_remove) new_durations.insert(*e.t_remove - e.t_add);
  }
  CHECK(new_durations == durations);
}

TEST_CASE("term statistic is the peak yearly count over both roles") {
  const TemporalGraph g = fig_burst_graph();
  const MotifParams p = default_params();
  MotifParams yearly = p;
  yearly.delta_days = 365;
  CHECK(term_statistic(g, "ZZ", {"T", 2021, 2024}, yearly) == 6);
  CHECK(term_statistic(g, "ZZ", {"T", 2017, 2020}, yearly) == 0);
  CHECK(term_statistic(g, "QQ", {"T", 2021, 2024}, yearly) == 0);

  // Matches the campaign table restricted to the term.
  MotifParams table_params = yearly;
  table_params.bins = yearly_bins(2021, 2024);
  long long best = 0;
  for (const MotifCount& row : campaign_table(g, {"ZZ"}, table_params)) {
    best = std::max(best, row.count);
  }
  CHECK(best == term_statistic(g, "ZZ", {"T", 2021, 2024}, yearly));

  CHECK_THROWS_AS(term_statistic(g, "ZZ", {"T", 1990, 1995}, yearly), EmptyTerm);
  CHECK_THROWS_AS(term_statistic(TemporalGraph{}, "ZZ", {"T", 2021, 2024}, yearly), EmptyGraph);
}

TEST_CASE("intermediate-side peaks also feed the statistic") {
  const TemporalGraph g = graph_of({
      edge("I1", "CN", "AA", "2019-02-01"),
      edge("I2", "CN", "BB", "2019-03-01"),
      edge("I3", "CN", "CC", "2019-04-01"),
  });
  MotifParams p = default_params();
  p.delta_days = 365;
  CHECK(term_statistic(g, "CN", {"T", 2017, 2020}, p) == 3);  // 0+1+2
}

TEST_CASE("p-value mechanics") {
  MotifParams p = default_params();
  p.delta_days = 365;

  SUBCASE("single replicate below the observed peak gives 1/2") {
    // Scattered background targets let the shuffle dilute the 2022 cluster.
    const TemporalGraph g = graph_of({
        edge("G1", "AA", "QA", "2010-01-01"),
        edge("G2", "BB", "QB", "2012-06-01"),
        edge("G3", "CC", "QC", "2015-01-01"),
        edge("G4", "DD", "QD", "2017-06-01"),
        edge("G5", "EE", "QE", "2019-01-01"),
        edge("G6", "FF", "QF", "2020-06-01"),
        edge("B1", "DD", "ZZ", "2022-06-01"),
        edge("B2", "EE", "ZZ", "2022-06-08"),
        edge("B3", "FF", "ZZ", "2022-06-15"),
        edge("B4", "GG", "ZZ", "2022-06-22"),
    });
    const Term term{"T", 2021, 2024};
    const PermutationReport report = permutation_test(g, "ZZ", term, p, 1, 5);
    CHECK(report.t_obs == 6);
    // Premise: the single replicate stays below the observed peak.
    REQUIRE(term_statistic(shuffle_realization(g, 5, 1), "ZZ", term, p) < report.t_obs);
    CHECK(report.p_value == 0.5);  // (1 + 0) / (1 + 1)
    CHECK(report.null_std == 0.0);
  }

  SUBCASE("degenerate single-pair graph pins p at 1") {
    std::vector<TemporalEdge> edges;
    for (int i = 0; i < 40; ++i) {
      edges.push_back(edge("P" + std::to_string(i), "CN", "IR",
                           Date::parse("2015-01-01").plus_days(i * 37).to_string().c_str()));
    }
    const TemporalGraph g = graph_of(std::move(edges));
    const PermutationReport report = permutation_test(g, "IR", {"T", 2015, 2018}, p, 50, 7);
    CHECK(report.p_value == 1.0);
    CHECK(report.null_mean == static_cast<double>(report.t_obs));
    CHECK(report.null_std == 0.0);
    CHECK(!report.significant);
  }

  SUBCASE("bounds hold on ordinary fixtures") {
    const TemporalGraph g = random_graph(150, 3);
    for (int replicates : {1, 7, 40}) {
      const PermutationReport report =
          permutation_test(g, "CN", {"T", 2009, 2012}, p, replicates, 11);
      CHECK(report.p_value >= 1.0 / (replicates + 1.0));
      CHECK(report.p_value <= 1.0);
    }
  }

  SUBCASE("replicate count must be positive") {
    const TemporalGraph g = fig_burst_graph();
    CHECK_THROWS_AS(permutation_test(g, "ZZ", {"T", 2021, 2024}, p, 0, 5), InvalidParams);
  }
}

TEST_CASE("batched reports equal individual permutation tests") {
  const TemporalGraph g = random_graph(200, 61);
  MotifParams p = default_params();
  const std::vector<std::string> countries = {"CN", "RU", "IR"};
  const std::vector<Term> terms = {{"A", 2007, 2010}, {"B", 2011, 2014}, {"C", 2015, 2018}};
  const auto batch = permutation_test_batch(g, countries, terms, p, 30, 13);
  REQUIRE(batch.size() == countries.size() * terms.size());
  std::size_t row = 0;
  for (const std::string& country : countries) {
    for (const Term& term : terms) {
      const PermutationReport single = permutation_test(g, country, term, p, 30, 13);
      CHECK(batch[row].country == single.country);
      CHECK(batch[row].term.label == single.term.label);
      CHECK(batch[row].t_obs == single.t_obs);
      CHECK(batch[row].p_value == single.p_value);
      CHECK(batch[row].null_mean == single.null_mean);
      CHECK(batch[row].null_std == single.null_std);
      ++row;
    }
  }
  CHECK(permutation_test_batch(g, {}, terms, p, 5, 13).empty());
  CHECK_THROWS_AS(permutation_test_batch(g, countries, terms, p, 0, 13), InvalidParams);
}

TEST_CASE("reports are identical across thread counts") {
  const TemporalGraph g = random_graph(250, 8);
  MotifParams p = default_params();
  const Term term{"T", 2013, 2016};
  const PermutationReport serial = permutation_test(g, "CN", term, p, 64, 19, NullKind::CaseShuffled, 1);
  const PermutationReport parallel =
      permutation_test(g, "CN", term, p, 64, 19, NullKind::CaseShuffled, 4);
  CHECK(serial.t_obs == parallel.t_obs);
  CHECK(serial.p_value == parallel.p_value);
  CHECK(serial.null_mean == parallel.null_mean);
  CHECK(serial.null_std == parallel.null_std);
}

TEST_CASE("p is non-increasing in the observed threshold over a fixed null sample") {
  const TemporalGraph g = random_graph(180, 14);
  MotifParams p = default_params();
  const Term term{"T", 2010, 2013};
  const int replicates = 40;
  std::vector<long long> null_stats;
  long long top = 0;
  for (int r = 1; r <= replicates; ++r) {
    null_stats.push_back(
        term_statistic(shuffle_realization(g, 55, static_cast<std::uint64_t>(r)), "CN", term, p));
    top = std::max(top, null_stats.back());
  }
  double previous = 2.0;
  for (long long threshold = 0; threshold <= top + 1; ++threshold) {
    long long at_least = 0;
    for (long long value : null_stats) {
      if (value >= threshold) ++at_least;
    }
    const double p_value = (1.0 + static_cast<double>(at_least)) / (replicates + 1.0);
    CHECK(p_value <= previous);
    CHECK(p_value >= 1.0 / (replicates + 1.0));
    CHECK(p_value <= 1.0);
    previous = p_value;
  }
}

TEST_CASE("the shipped terms file matches the built-in defaults") {
  const auto from_file =
      load_terms(std::filesystem::path(SANGRAPH_SOURCE_DIR) / "configs" / "terms_us.json");
  const auto built_in = default_us_terms();
  REQUIRE(from_file.size() == built_in.size());
  for (std::size_t i = 0; i < built_in.size(); ++i) {
    CHECK(from_file[i].label == built_in[i].label);
    CHECK(from_file[i].start_year == built_in[i].start_year);
    CHECK(from_file[i].end_year == built_in[i].end_year);
  }
}

TEST_CASE("terms configuration parsing and validation") {
  CHECK_NOTHROW(validate_terms(default_us_terms()));

  CHECK_THROWS_AS(validate_terms({{"A", 2001, 2008}, {"B", 2008, 2012}}), InvalidParams);
  CHECK_THROWS_AS(validate_terms({{"A", 2008, 2001}}), InvalidParams);
  CHECK_THROWS_AS(validate_terms({{"", 2001, 2004}}), InvalidParams);

  const nlohmann::json doc = nlohmann::json::parse(
      R"([{"label":"Obama","start_year":2009,"end_year":2016},
          {"label":"Trump","start_year":2017,"end_year":2020}])");
  const auto terms = parse_terms(doc);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].label == "Obama");
  CHECK(terms[1].end_year == 2020);
  CHECK_THROWS_AS(parse_terms(nlohmann::json::parse(R"({"label":"x"})")), InvalidParams);
}

TEST_CASE("permutation csv layout") {
  PermutationReport r;
  r.country = "CN";
  r.term = {"Biden", 2021, 2024};
  r.t_obs = 42;
  r.null_mean = 10.5;
  r.null_std = 2.25;
  r.replicates = 1000;
  r.p_value = 1.0 / 1001.0;
  r.seed = 7;
  r.significant = true;
  std::ostringstream out;
  write_permutation_csv(out, {r});
  CHECK(out.str() ==
        "country,term,t_obs,null_mean,null_std,R,p_value,sig,seed\n"
        "CN,Biden,42,10.5000,2.2500,1000,0.000999000999,1,7\n");
}
