#include "sangraph/rsi.hpp"

#include <cstdio>
#include <ostream>
#include <set>

#include "sangraph/csv.hpp"

namespace sangraph {

RsiPoint rsi_at(const TemporalGraph& g, const std::string& country, Date t) {
  RsiPoint p;
  p.country = country;
  p.t = t;
  p.deg_int = g.degree(RoleNode{country, Role::Intermediate}, t);
  p.deg_fin = g.degree(RoleNode{country, Role::Final}, t);
  if (p.deg_int + p.deg_fin > 0) {
    p.rsi = (static_cast<double>(p.deg_int) - static_cast<double>(p.deg_fin)) /
            (static_cast<double>(p.deg_int) + static_cast<double>(p.deg_fin));
  }
  return p;
}

std::vector<RsiPoint> rsi_series(const TemporalGraph& g, const std::string& country,
                                 const std::vector<Date>& bins) {
  if (bins.empty()) throw EmptyBins("rsi_series: no bin dates given");
  for (std::size_t i = 1; i < bins.size(); ++i) {
    if (!(bins[i - 1] < bins[i])) {
      throw InvalidParams("rsi_series: bin dates must be strictly increasing");
    }
  }
  std::vector<RsiPoint> series;
  series.reserve(bins.size());
  for (Date t : bins) series.push_back(rsi_at(g, country, t));
  return series;
}

std::map<std::string, RsiPoint> rsi_snapshot(const TemporalGraph& g, Date t) {
  std::map<std::string, RsiPoint> snapshot;
  for (const std::string& country : g.countries()) {
    if (country == kUnknownCountry) continue;
    RsiPoint p = rsi_at(g, country, t);
    if (p.deg_int + p.deg_fin > 0) snapshot.emplace(country, std::move(p));
  }
  return snapshot;
}

std::vector<Date> year_end_bins(int first_year, int last_year) {
  std::vector<Date> bins;
  for (int y = first_year; y <= last_year; ++y) bins.push_back(Date::year_end(y));
  return bins;
}

void write_rsi_csv(std::ostream& out, const std::vector<RsiPoint>& points) {
  csv::write_row(out, {"country", "t", "deg_int", "deg_fin", "rsi"});
  for (const RsiPoint& p : points) {
    std::string rsi_text;
    if (p.rsi) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.4f", *p.rsi);
      rsi_text = buf;
    }
    csv::write_row(out, {p.country, p.t.to_string(), std::to_string(p.deg_int),
                         std::to_string(p.deg_fin), rsi_text});
  }
}

}  // namespace sangraph
