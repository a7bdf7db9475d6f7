#include "sangraph/null_model.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "sangraph/csv.hpp"
#include "sangraph/rng.hpp"

namespace sangraph {

std::string_view null_kind_name(NullKind k) {
  return k == NullKind::CaseShuffled ? "case" : "time";
}

void validate_terms(const std::vector<Term>& terms) {
  for (const Term& t : terms) {
    if (t.label.empty()) throw InvalidParams("term label must not be empty");
    if (t.start_year > t.end_year) {
      throw InvalidParams("term \"" + t.label + "\" has start_year after end_year");
    }
  }
  std::vector<Term> sorted = terms;
  std::sort(sorted.begin(), sorted.end(),
            [](const Term& a, const Term& b) { return a.start_year < b.start_year; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1].end_year >= sorted[i].start_year) {
      throw InvalidParams("terms \"" + sorted[i - 1].label + "\" and \"" + sorted[i].label +
                          "\" overlap");
    }
  }
}

std::vector<Term> parse_terms(const nlohmann::json& doc) {
  if (!doc.is_array()) throw InvalidParams("terms file must hold a JSON array");
  std::vector<Term> terms;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("label") || !item.contains("start_year") ||
        !item.contains("end_year")) {
      throw InvalidParams("each term needs label, start_year and end_year");
    }
    terms.push_back({item.at("label").get<std::string>(), item.at("start_year").get<int>(),
                     item.at("end_year").get<int>()});
  }
  validate_terms(terms);
  return terms;
}

std::vector<Term> load_terms(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open terms file: " + path.string());
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw InvalidParams("terms file is not valid JSON: " + path.string());
  return parse_terms(doc);
}

std::vector<Term> default_us_terms() {
  return {{"Bush", 2001, 2008}, {"Obama", 2009, 2016}, {"Trump", 2017, 2020},
          {"Biden", 2021, 2024}};
}

TemporalGraph shuffle_realization(const TemporalGraph& g, std::uint64_t seed,
                                  std::uint64_t replicate_index, NullKind kind) {
  if (g.empty()) throw EmptyGraph("shuffle_realization: graph has no edges");

  std::vector<TemporalEdge> edges = g.edges();
  SplitMix64 rng = SplitMix64::keyed(seed, replicate_index);

  if (kind == NullKind::CaseShuffled) {
    // Slots keep their timestamps and durations; only the pair labels move.
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(edges.size());
    for (const TemporalEdge& e : edges) pairs.emplace_back(e.u_country, e.v_country);
    shuffle_in_place(pairs, rng);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      edges[i].u_country = std::move(pairs[i].first);
      edges[i].v_country = std::move(pairs[i].second);
    }
  } else {
    // Flat baseline: start dates drawn uniformly over the observation
    // window, durations and pairs preserved.
    const Date lo = *g.min_t_add();
    const int span = *g.max_t_add() - lo;
    for (TemporalEdge& e : edges) {
      std::optional<int> duration;
      if (e.t_remove) duration = *e.t_remove - e.t_add;
      e.t_add = lo.plus_days(
          static_cast<int>(rng.bounded(static_cast<std::uint64_t>(span) + 1)));
      if (duration) e.t_remove = e.t_add.plus_days(*duration);
    }
  }
  return TemporalGraph::from_edges(std::move(edges));
}

long long term_statistic(const TemporalGraph& g, const std::string& country, const Term& term,
                         const MotifParams& params) {
  if (g.empty()) throw EmptyGraph("term_statistic: graph has no edges");
  if (term.start_year > term.end_year) {
    throw InvalidParams("term \"" + term.label + "\" has start_year after end_year");
  }
  const int data_first = g.min_t_add()->year();
  const int data_last = g.max_t_add()->year();
  if (term.end_year < data_first || term.start_year > data_last) {
    throw EmptyTerm("term \"" + term.label + "\" (" + std::to_string(term.start_year) + "-" +
                    std::to_string(term.end_year) + ") does not intersect the data range");
  }

  MotifParams term_params = params;
  term_params.bins = yearly_bins(term.start_year, term.end_year);

  long long best = 0;
  for (Role role : {Role::Intermediate, Role::Final}) {
    for (const MotifCount& row : motif_counts(g, country, role, term_params)) {
      best = std::max(best, row.count);
    }
  }
  return best;
}

namespace {

// Runs body(r) for every replicate r in 1..R across a small thread pool.
// Replicates are claimed through an atomic counter; the first exception wins
// and is rethrown after the pool drains.
template <typename Body>
void for_each_replicate(int replicates, int threads, const Body& body) {
  int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  n_threads = std::clamp(n_threads, 1, replicates);

  std::atomic<int> next{1};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      for (;;) {
        const int r = next.fetch_add(1);
        if (r > replicates) return;
        body(r);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

// Reduction over the null sample, always in replicate-index order.
PermutationReport reduce_report(std::string country, Term term, long long t_obs,
                                const std::vector<long long>& null_stats, std::uint64_t seed) {
  const int replicates = static_cast<int>(null_stats.size());
  PermutationReport report;
  report.country = std::move(country);
  report.term = std::move(term);
  report.replicates = replicates;
  report.seed = seed;
  report.t_obs = t_obs;

  long long at_least = 0;
  double sum = 0.0;
  for (long long value : null_stats) {
    if (value >= t_obs) ++at_least;
    sum += static_cast<double>(value);
  }
  report.null_mean = sum / static_cast<double>(replicates);
  if (replicates >= 2) {
    double ss = 0.0;
    for (long long value : null_stats) {
      const double d = static_cast<double>(value) - report.null_mean;
      ss += d * d;
    }
    report.null_std = std::sqrt(ss / static_cast<double>(replicates - 1));
  }
  report.p_value =
      (1.0 + static_cast<double>(at_least)) / (static_cast<double>(replicates) + 1.0);
  report.significant = report.p_value < 0.005;
  return report;
}

}  // namespace

PermutationReport permutation_test(const TemporalGraph& g, const std::string& country,
                                   const Term& term, const MotifParams& params, int replicates,
                                   std::uint64_t seed, NullKind kind, int threads) {
  if (replicates < 1) throw InvalidParams("replicates must be at least 1");

  const long long t_obs = term_statistic(g, country, term, params);
  std::vector<long long> null_stats(static_cast<std::size_t>(replicates), 0);
  for_each_replicate(replicates, threads, [&](int r) {
    const TemporalGraph shuffled =
        shuffle_realization(g, seed, static_cast<std::uint64_t>(r), kind);
    null_stats[static_cast<std::size_t>(r - 1)] = term_statistic(shuffled, country, term, params);
  });
  return reduce_report(country, term, t_obs, null_stats, seed);
}

std::vector<PermutationReport> permutation_test_batch(
    const TemporalGraph& g, const std::vector<std::string>& countries,
    const std::vector<Term>& terms, const MotifParams& params, int replicates,
    std::uint64_t seed, NullKind kind, int threads) {
  if (replicates < 1) throw InvalidParams("replicates must be at least 1");

  struct Row {
    const std::string* country;
    const Term* term;
    long long t_obs;
  };
  std::vector<Row> rows;
  rows.reserve(countries.size() * terms.size());
  for (const std::string& country : countries) {
    for (const Term& term : terms) {
      rows.push_back({&country, &term, term_statistic(g, country, term, params)});
    }
  }
  if (rows.empty()) return {};

  // stats are row-major per replicate slot, so any thread schedule produces
  // the same reduction input.
  const std::size_t n = static_cast<std::size_t>(replicates);
  std::vector<long long> stats(rows.size() * n, 0);
  for_each_replicate(replicates, threads, [&](int r) {
    const TemporalGraph shuffled =
        shuffle_realization(g, seed, static_cast<std::uint64_t>(r), kind);
    for (std::size_t row = 0; row < rows.size(); ++row) {
      stats[row * n + static_cast<std::size_t>(r - 1)] =
          term_statistic(shuffled, *rows[row].country, *rows[row].term, params);
    }
  });

  std::vector<PermutationReport> reports;
  reports.reserve(rows.size());
  for (std::size_t row = 0; row < rows.size(); ++row) {
    const std::vector<long long> null_stats(stats.begin() + static_cast<std::ptrdiff_t>(row * n),
                                            stats.begin() +
                                                static_cast<std::ptrdiff_t>((row + 1) * n));
    reports.push_back(
        reduce_report(*rows[row].country, *rows[row].term, rows[row].t_obs, null_stats, seed));
  }
  return reports;
}

void write_permutation_csv(std::ostream& out, const std::vector<PermutationReport>& reports) {
  csv::write_row(out, {"country", "term", "t_obs", "null_mean", "null_std", "R", "p_value",
                       "sig", "seed"});
  for (const PermutationReport& r : reports) {
    char mean_buf[32];
    char std_buf[32];
    char p_buf[32];
    std::snprintf(mean_buf, sizeof(mean_buf), "%.4f", r.null_mean);
    std::snprintf(std_buf, sizeof(std_buf), "%.4f", r.null_std);
    std::snprintf(p_buf, sizeof(p_buf), "%.10g", r.p_value);
    csv::write_row(out, {r.country, r.term.label, std::to_string(r.t_obs), mean_buf, std_buf,
                         std::to_string(r.replicates), p_buf, r.significant ? "1" : "0",
                         std::to_string(r.seed)});
  }
}

}  // namespace sangraph
