#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sangraph/temporal_graph.hpp"

namespace sangraph {

// Closed date interval used as a counting bin.
struct DateInterval {
  Date start;
  Date end;
  bool contains(Date t) const { return start <= t && t <= end; }
  auto operator<=>(const DateInterval&) const = default;
};

std::vector<DateInterval> yearly_bins(int first_year, int last_year);

// When is a pair of designations judged to be simultaneously in force?
//   BinEnd         - at the last day of the bin holding the later event
//   LaterEventTime - at the later event's own add date
enum class ObservationRule { BinEnd, LaterEventTime };

std::string_view observation_rule_name(ObservationRule r);

struct MotifParams {
  int delta_days = 1461;  // four years, presidential-term window
  std::vector<DateInterval> bins;
  ObservationRule observation_rule = ObservationRule::BinEnd;
  // Federal Register notices list many entities on one day; with this on,
  // same-day pairs count once in (t_add, edge_key) order. With it off the
  // time gap must be strictly positive.
  bool include_same_day = true;

  void validate() const;  // throws InvalidParams
};

struct MotifCount {
  std::string country;
  Role role;
  DateInterval bin;
  long long count = 0;
};

// Number of prior edges on the same role-node within delta of the given
// edge's add date (no in-force filtering; that belongs to binned counting).
// Throws UnknownEdge.
long long event_weight(const TemporalGraph& g, std::string_view edge_key, Role role,
                       const MotifParams& params);

// Per-bin campaign intensity: for each edge added inside a bin, the number
// of qualifying priors on the same role-node such that both edges are in
// force at the observation time. Sliding-window implementation,
// O(n log n + pairs) per role-node.
std::vector<MotifCount> motif_counts(const TemporalGraph& g, const std::string& country,
                                     Role role, const MotifParams& params);

// Long-form rows (country, role, bin, count) for both roles of each country.
std::vector<MotifCount> campaign_table(const TemporalGraph& g,
                                       const std::vector<std::string>& countries,
                                       const MotifParams& params);

// CSV: country,role,bin_start,bin_end,count
void write_motif_csv(std::ostream& out, const std::vector<MotifCount>& rows);

}  // namespace sangraph
