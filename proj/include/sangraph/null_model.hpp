#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sangraph/motifs.hpp"
#include "sangraph/temporal_graph.hpp"

namespace sangraph {

// Inclusive year span, e.g. one presidential term.
struct Term {
  std::string label;
  int start_year = 0;
  int end_year = 0;
};

// Sorted by start year; throws InvalidParams on overlap or inverted spans.
void validate_terms(const std::vector<Term>& terms);
std::vector<Term> parse_terms(const nlohmann::json& doc);
std::vector<Term> load_terms(const std::filesystem::path& path);
std::vector<Term> default_us_terms();

// CaseShuffled permutes the country-pair labels across edge slots; every
// slot keeps its own timestamps and duration, so per-year activity is
// untouched. TimeShuffled instead redraws start dates uniformly over the
// observation window (flat baseline, kept for comparison studies).
enum class NullKind { CaseShuffled, TimeShuffled };

std::string_view null_kind_name(NullKind k);

// Deterministic given (seed, replicate_index); replicates are independent
// streams. Throws EmptyGraph.
TemporalGraph shuffle_realization(const TemporalGraph& g, std::uint64_t seed,
                                  std::uint64_t replicate_index,
                                  NullKind kind = NullKind::CaseShuffled);

// Peak yearly motif count within the term, maximized over both roles.
// params.bins are ignored; the term supplies yearly bins. Throws EmptyGraph
// and EmptyTerm (term years outside the data range).
long long term_statistic(const TemporalGraph& g, const std::string& country,
                         const Term& term, const MotifParams& params);

struct PermutationReport {
  std::string country;
  Term term;
  long long t_obs = 0;
  double null_mean = 0.0;
  double null_std = 0.0;  // sample std over replicates, R-1 denominator
  int replicates = 0;
  double p_value = 1.0;  // (1 + #{T_r >= t_obs}) / (R + 1), one-sided
  std::uint64_t seed = 0;
  bool significant = false;  // p < 0.005
};

// Runs R shuffle realizations (optionally across threads; results do not
// depend on the schedule) and reports the one-sided permutation p-value.
// threads = 0 picks a sensible default. Throws InvalidParams (R < 1) and
// propagates EmptyGraph/EmptyTerm.
PermutationReport permutation_test(const TemporalGraph& g, const std::string& country,
                                   const Term& term, const MotifParams& params,
                                   int replicates, std::uint64_t seed,
                                   NullKind kind = NullKind::CaseShuffled,
                                   int threads = 0);

// One report per (country, term), in that nesting order. Realization r is a
// pure function of (seed, r), so the R shuffles are computed once and shared
// across rows; every report equals its individual permutation_test result.
std::vector<PermutationReport> permutation_test_batch(
    const TemporalGraph& g, const std::vector<std::string>& countries,
    const std::vector<Term>& terms, const MotifParams& params, int replicates,
    std::uint64_t seed, NullKind kind = NullKind::CaseShuffled, int threads = 0);

// CSV: country,term,t_obs,null_mean,null_std,R,p_value,sig,seed
void write_permutation_csv(std::ostream& out, const std::vector<PermutationReport>& reports);

}  // namespace sangraph
