#include "sangraph/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "sangraph/rng.hpp"

namespace sangraph {

namespace {

struct AddSlot {
  std::string entity;
  Date date;
  std::string intermediate;
  std::string final_target;
  std::optional<Date> removed_at;
};

// Largest-remainder apportionment so counts hit n exactly.
std::array<long long, 3> apportion(long long n, double p_add, double p_revise, double p_remove) {
  const std::array<double, 3> p = {p_add, p_revise, p_remove};
  std::array<long long, 3> counts{};
  std::array<double, 3> fractional{};
  long long assigned = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double exact = static_cast<double>(n) * p[i];
    counts[i] = static_cast<long long>(std::floor(exact));
    fractional[i] = exact - std::floor(exact);
    assigned += counts[i];
  }
  std::array<std::size_t, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fractional[a] > fractional[b]; });
  for (long long k = 0; k < n - assigned; ++k) ++counts[order[static_cast<std::size_t>(k) % 3]];
  return counts;
}

class WeightedPicker {
 public:
  explicit WeightedPicker(const std::vector<std::pair<std::string, double>>& pool) {
    double cumulative = 0.0;
    for (const auto& [code, weight] : pool) {
      if (weight < 0.0) throw InfeasibleConfig("country pool weight must be non-negative");
      cumulative += weight;
      codes_.push_back(code);
      cumulative_.push_back(cumulative);
    }
    if (cumulative <= 0.0) throw InfeasibleConfig("country pool weights sum to zero");
  }

  const std::string& pick(SplitMix64& rng) const {
    const double u = rng.next_double() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const std::size_t index =
        std::min(static_cast<std::size_t>(it - cumulative_.begin()), codes_.size() - 1);
    return codes_[index];
  }

 private:
  std::vector<std::string> codes_;
  std::vector<double> cumulative_;
};

Date random_date_in_year(int year, SplitMix64& rng) {
  const Date start = Date::year_start(year);
  const int span = Date::year_end(year) - start;
  return start.plus_days(static_cast<int>(rng.bounded(static_cast<std::uint64_t>(span) + 1)));
}

struct ReasonTemplate {
  ReasonCategory category;
  double weight;
  const char* text;
};

const std::array<ReasonTemplate, 8>& reason_templates() {
  static const std::array<ReasonTemplate, 8> templates = {{
      {ReasonCategory::EvasionSupplyChain, 34.62,
       "procurement on behalf of listed parties"},
      {ReasonCategory::ConventionalMilitary, 32.62,
       "support to foreign military programs"},
      {ReasonCategory::WmdPrograms, 13.05, "contributions to weapons proliferation"},
      {ReasonCategory::Semiconductors, 8.46, "diversion of advanced computing items"},
      {ReasonCategory::OtherUnknown, 4.06, "activities contrary to policy interests"},
      {ReasonCategory::HumanRightsSurveillance, 3.61, "enabling surveillance programs"},
      {ReasonCategory::EnergyInfrastructure, 2.48, "support to energy sector end uses"},
      {ReasonCategory::CyberCommunications, 1.10, "malicious cyber-enabled activities"},
  }};
  return templates;
}

ReasonTemplate pick_reason(SplitMix64& rng) {
  const auto& templates = reason_templates();
  double total = 0.0;
  for (const auto& t : templates) total += t.weight;
  double u = rng.next_double() * total;
  for (const auto& t : templates) {
    if (u < t.weight) return t;
    u -= t.weight;
  }
  return templates.back();
}

}  // namespace

std::vector<std::pair<std::string, double>> default_country_pool() {
  return {{"CN", 33.2}, {"RU", 28.3}, {"AE", 6.0}, {"PK", 5.5}, {"IR", 3.7},
          {"TR", 2.2},  {"MY", 1.5},  {"GB", 1.5}, {"IN", 1.5}, {"SG", 1.3},
          {"HK", 1.2},  {"AF", 1.4},  {"UA", 1.2}, {"SY", 0.9}, {"IQ", 0.8},
          {"DE", 1.0},  {"FI", 0.6},  {"NL", 0.6}, {"TH", 0.5}, {"JP", 0.5}};
}

std::vector<SanctionEvent> generate(const SynthConfig& config) {
  if (config.n_events < 0) throw InfeasibleConfig("n_events must be non-negative");
  const double mix_sum = config.p_add + config.p_revise + config.p_remove;
  if (config.p_add < 0.0 || config.p_revise < 0.0 || config.p_remove < 0.0 ||
      std::abs(mix_sum - 1.0) > 1e-9) {
    throw InfeasibleConfig("action mix proportions must be non-negative and sum to 1");
  }
  if (config.year_first > config.year_last) {
    throw InfeasibleConfig("year range is inverted");
  }
  for (const BurstSpec& burst : config.bursts) {
    if (burst.size < 0) throw InfeasibleConfig("burst size must be non-negative");
    if (burst.year < config.year_first || burst.year > config.year_last) {
      throw InfeasibleConfig("burst year " + std::to_string(burst.year) +
                             " outside the configured year range");
    }
  }
  if (config.n_events == 0) return {};

  const auto counts = apportion(config.n_events, config.p_add, config.p_revise, config.p_remove);
  const long long n_add = counts[0];
  const long long n_revise = counts[1];
  const long long n_remove = counts[2];
  if (n_add == 0 && (n_revise > 0 || n_remove > 0)) {
    throw InfeasibleConfig("revise/remove events require at least one Add");
  }
  if (n_remove > n_add) throw InfeasibleConfig("more removals than additions");

  long long burst_total = 0;
  for (const BurstSpec& burst : config.bursts) burst_total += burst.size;
  if (burst_total > n_add) {
    throw InfeasibleConfig("burst sizes exceed the Add budget");
  }

  const auto pool = config.country_pool.empty() ? default_country_pool() : config.country_pool;
  const WeightedPicker picker(pool);
  SplitMix64 rng(config.seed);

  const Date range_end = Date::year_end(config.year_last);

  // Adds first: bursts, then background.
  std::vector<AddSlot> adds;
  adds.reserve(static_cast<std::size_t>(n_add));
  long long entity_counter = 0;
  auto next_entity = [&entity_counter] {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "ENT-%06lld", ++entity_counter);
    return std::string(buf);
  };

  for (const BurstSpec& burst : config.bursts) {
    // Clustered inside a ~9 week window so the whole burst fits any
    // campaign-detection delta of interest.
    const Date year_start = Date::year_start(burst.year);
    const int latest_start = std::max(0, Date::year_end(burst.year) - year_start - 63);
    const Date window_start = year_start.plus_days(
        static_cast<int>(rng.bounded(static_cast<std::uint64_t>(latest_start) + 1)));
    for (int i = 0; i < burst.size; ++i) {
      AddSlot slot;
      slot.entity = next_entity();
      slot.date = window_start.plus_days(i * (63 / std::max(1, burst.size)));
      if (burst.role == Role::Final) {
        slot.final_target = burst.country;
        slot.intermediate = picker.pick(rng);
      } else {
        slot.intermediate = burst.country;
        slot.final_target = picker.pick(rng);
      }
      adds.push_back(std::move(slot));
    }
  }
  for (long long i = burst_total; i < n_add; ++i) {
    AddSlot slot;
    slot.entity = next_entity();
    slot.date = random_date_in_year(rng.uniform_int(config.year_first, config.year_last), rng);
    slot.intermediate = picker.pick(rng);
    slot.final_target = picker.pick(rng);
    adds.push_back(std::move(slot));
  }

  // Removals target distinct adds, never on the add date itself (a same-day
  // remove would yield a never-active edge).
  std::vector<std::size_t> removal_order(adds.size());
  std::iota(removal_order.begin(), removal_order.end(), 0);
  shuffle_in_place(removal_order, rng);
  struct PendingRemove {
    std::size_t add_index;
    Date date;
  };
  std::vector<PendingRemove> removes;
  removes.reserve(static_cast<std::size_t>(n_remove));
  for (long long k = 0; k < n_remove; ++k) {
    const std::size_t add_index = removal_order[static_cast<std::size_t>(k)];
    AddSlot& slot = adds[add_index];
    const Date earliest = slot.date.plus_days(1);
    const Date latest = std::max(earliest, range_end);
    const int span = latest - earliest;
    const Date when =
        earliest.plus_days(static_cast<int>(rng.bounded(static_cast<std::uint64_t>(span) + 1)));
    slot.removed_at = when;
    removes.push_back({add_index, when});
  }

  struct PendingRevise {
    std::size_t add_index;
    Date date;
  };
  std::vector<PendingRevise> revises;
  revises.reserve(static_cast<std::size_t>(n_revise));
  for (long long k = 0; k < n_revise; ++k) {
    const std::size_t add_index =
        static_cast<std::size_t>(rng.bounded(static_cast<std::uint64_t>(adds.size())));
    const AddSlot& slot = adds[add_index];
    // Keep revisions strictly inside the life span so linking never warns.
    const Date latest = slot.removed_at ? slot.removed_at->plus_days(-1) : range_end;
    const Date earliest = std::min(slot.date, latest);
    const int span = latest - earliest;
    const Date when =
        earliest.plus_days(static_cast<int>(rng.bounded(static_cast<std::uint64_t>(span) + 1)));
    revises.push_back({add_index, when});
  }

  struct Draft {
    Date date;
    Action action;
    std::size_t add_index;
  };
  std::vector<Draft> drafts;
  drafts.reserve(static_cast<std::size_t>(config.n_events));
  for (std::size_t i = 0; i < adds.size(); ++i) drafts.push_back({adds[i].date, Action::Add, i});
  for (const PendingRevise& r : revises) drafts.push_back({r.date, Action::Revise, r.add_index});
  for (const PendingRemove& r : removes) drafts.push_back({r.date, Action::Remove, r.add_index});

  // Stable by date: ties keep creation order, so an Add always precedes its
  // same-day revisions once event ids are assigned.
  std::stable_sort(drafts.begin(), drafts.end(),
                   [](const Draft& a, const Draft& b) { return a.date < b.date; });

  std::vector<SanctionEvent> events;
  events.reserve(drafts.size());
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    const Draft& d = drafts[i];
    const AddSlot& slot = adds[d.add_index];
    SanctionEvent ev;
    char id[32];
    std::snprintf(id, sizeof(id), "SYN-%06zu", i + 1);
    ev.event_id = id;
    ev.date = d.date;
    ev.entity_name = slot.entity;
    ev.intermediate = slot.intermediate;
    ev.action = d.action;
    if (d.action != Action::Remove) ev.finals = {slot.final_target};
    const ReasonTemplate reason = pick_reason(rng);
    ev.reason_category = reason.category;
    ev.reason = reason.text;
    char doc[40];
    std::snprintf(doc, sizeof(doc), "FR-SYN-%d-%04zu", d.date.year(), i % 10000);
    ev.source_doc = doc;
    events.push_back(std::move(ev));
  }
  return events;
}

}  // namespace sangraph
