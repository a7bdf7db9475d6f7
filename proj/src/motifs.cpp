#include "sangraph/motifs.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "sangraph/csv.hpp"

namespace sangraph {

namespace {

// Index of the bin containing t, or -1. Bins are sorted and non-overlapping.
int find_bin(const std::vector<DateInterval>& bins, Date t) {
  auto it = std::upper_bound(bins.begin(), bins.end(), t,
                             [](Date value, const DateInterval& bin) { return value < bin.start; });
  if (it == bins.begin()) return -1;
  --it;
  return it->contains(t) ? static_cast<int>(it - bins.begin()) : -1;
}

// Per-bin weighted counts for one role-node. The incident list is sorted by
// (t_add, key); `lo` tracks the oldest edge still within delta of the
// current one, so each qualifying pair is touched exactly once.
std::vector<long long> counts_for_node(const TemporalGraph& g, const RoleNode& node,
                                       const MotifParams& params) {
  std::vector<long long> per_bin(params.bins.size(), 0);
  const auto& inc = g.incident(node);
  const auto& edges = g.edges();

  std::size_t lo = 0;
  for (std::size_t i = 0; i < inc.size(); ++i) {
    const TemporalEdge& e = edges[inc[i]];
    while (lo < i && e.t_add - edges[inc[lo]].t_add > params.delta_days) ++lo;

    const int bin = find_bin(params.bins, e.t_add);
    if (bin < 0) continue;  // outside the partition; still a prior for later edges
    const Date t_obs = params.observation_rule == ObservationRule::BinEnd
                           ? params.bins[static_cast<std::size_t>(bin)].end
                           : e.t_add;
    if (!e.active_at(t_obs)) continue;

    long long weight = 0;
    for (std::size_t j = lo; j < i; ++j) {
      const TemporalEdge& prior = edges[inc[j]];
      // Same-day priors sit at the tail of the window (sort is by t_add,
      // then key, so they all precede e in edge_key order).
      if (prior.t_add == e.t_add && !params.include_same_day) break;
      if (prior.active_at(t_obs)) ++weight;
    }
    per_bin[static_cast<std::size_t>(bin)] += weight;
  }
  return per_bin;
}

}  // namespace

std::vector<DateInterval> yearly_bins(int first_year, int last_year) {
  std::vector<DateInterval> bins;
  for (int y = first_year; y <= last_year; ++y) {
    bins.push_back({Date::year_start(y), Date::year_end(y)});
  }
  return bins;
}

std::string_view observation_rule_name(ObservationRule r) {
  return r == ObservationRule::BinEnd ? "bin-end" : "event-time";
}

void MotifParams::validate() const {
  if (delta_days <= 0) throw InvalidParams("delta_days must be positive");
  if (bins.empty()) throw InvalidParams("bin partition must not be empty");
  for (std::size_t i = 0; i < bins.size(); ++i) {
    if (bins[i].end < bins[i].start) {
      throw InvalidParams("bin " + std::to_string(i) + " ends before it starts");
    }
    if (i > 0 && !(bins[i - 1].end < bins[i].start)) {
      throw InvalidParams("bins must be sorted and non-overlapping");
    }
  }
}

long long event_weight(const TemporalGraph& g, std::string_view edge_key, Role role,
                       const MotifParams& params) {
  if (params.delta_days <= 0) throw InvalidParams("delta_days must be positive");
  const auto index = g.find_edge(edge_key);
  if (!index) throw UnknownEdge("no edge with key \"" + std::string(edge_key) + "\"");

  const TemporalEdge& e = g.edge(*index);
  const RoleNode node{role == Role::Intermediate ? e.u_country : e.v_country, role};
  const auto& inc = g.incident(node);
  const auto& edges = g.edges();

  long long weight = 0;
  for (std::size_t pos : inc) {
    if (pos == *index) break;  // incident list is in (t_add, key) order
    const TemporalEdge& prior = edges[pos];
    const int gap = e.t_add - prior.t_add;
    if (gap > params.delta_days) continue;
    if (gap == 0 && !params.include_same_day) break;
    ++weight;
  }
  return weight;
}

std::vector<MotifCount> motif_counts(const TemporalGraph& g, const std::string& country,
                                     Role role, const MotifParams& params) {
  params.validate();
  const auto per_bin = counts_for_node(g, RoleNode{country, role}, params);
  std::vector<MotifCount> rows;
  rows.reserve(per_bin.size());
  for (std::size_t b = 0; b < per_bin.size(); ++b) {
    rows.push_back({country, role, params.bins[b], per_bin[b]});
  }
  return rows;
}

std::vector<MotifCount> campaign_table(const TemporalGraph& g,
                                       const std::vector<std::string>& countries,
                                       const MotifParams& params) {
  params.validate();

  // One task per (country, role); results land in task order so the table is
  // independent of the execution schedule.
  struct Task {
    const std::string* country;
    Role role;
  };
  std::vector<Task> tasks;
  tasks.reserve(countries.size() * 2);
  for (const std::string& country : countries) {
    tasks.push_back({&country, Role::Intermediate});
    tasks.push_back({&country, Role::Final});
  }

  std::vector<std::vector<MotifCount>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      results[i] = motif_counts(g, *tasks[i].country, tasks[i].role, params);
    }
  };

  const unsigned hardware = std::thread::hardware_concurrency();
  const std::size_t n_threads =
      std::min<std::size_t>(tasks.size(), hardware > 0 ? hardware : 1);
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<MotifCount> rows;
  rows.reserve(tasks.size() * params.bins.size());
  for (std::vector<MotifCount>& part : results) {
    rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  return rows;
}

void write_motif_csv(std::ostream& out, const std::vector<MotifCount>& rows) {
  csv::write_row(out, {"country", "role", "bin_start", "bin_end", "count"});
  for (const MotifCount& row : rows) {
    csv::write_row(out, {row.country, std::string(role_name(row.role)),
                         row.bin.start.to_string(), row.bin.end.to_string(),
                         std::to_string(row.count)});
  }
}

}  // namespace sangraph
