#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sangraph/events.hpp"
#include "sangraph/temporal_graph.hpp"

namespace sangraph {

// Injects a concentrated same-year campaign on one role-node.
struct BurstSpec {
  std::string country;
  Role role = Role::Final;
  int year = 0;
  int size = 0;
};

struct SynthConfig {
  std::uint64_t seed = 1;
  int n_events = 0;
  // Proportions over {Add, Revise, Remove}; must sum to 1 within 1e-9.
  double p_add = 0.80;
  double p_revise = 0.15;
  double p_remove = 0.05;
  std::vector<std::pair<std::string, double>> country_pool;  // code, weight
  int year_first = 2000;
  int year_last = 2024;
  std::vector<BurstSpec> bursts;
};

// Weighted roughly like the observed country mix; good enough for fixtures.
std::vector<std::pair<std::string, double>> default_country_pool();

// Deterministic synthetic event log. Every Remove targets a previously
// generated Add and every Revise lands inside its target's life span, so
// linking a burst-free output produces zero warnings.
// Throws InfeasibleConfig on contradictory settings.
std::vector<SanctionEvent> generate(const SynthConfig& config);

}  // namespace sangraph
