#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sangraph/temporal_graph.hpp"

namespace sangraph {

// Role Skew Index sample for one country at one time.
// rsi = (deg_int - deg_fin) / (deg_int + deg_fin), undefined when both
// degrees are zero (nullopt, not 0: "no data" is not "balanced role").
struct RsiPoint {
  std::string country;
  Date t;
  int deg_int = 0;
  int deg_fin = 0;
  std::optional<double> rsi;
};

RsiPoint rsi_at(const TemporalGraph& g, const std::string& country, Date t);

// One point per bin date. Throws EmptyBins when bins is empty and
// InvalidParams when bins are not strictly increasing.
std::vector<RsiPoint> rsi_series(const TemporalGraph& g, const std::string& country,
                                 const std::vector<Date>& bins);

// Every country with activity at t, keyed by code. The unknown-target
// placeholder XX is excluded from role analytics.
std::map<std::string, RsiPoint> rsi_snapshot(const TemporalGraph& g, Date t);

// Default series bins: December 31 of each year in [first_year, last_year].
std::vector<Date> year_end_bins(int first_year, int last_year);

// CSV: country,t,deg_int,deg_fin,rsi — rsi to 4 decimals, empty if undefined.
void write_rsi_csv(std::ostream& out, const std::vector<RsiPoint>& points);

}  // namespace sangraph
