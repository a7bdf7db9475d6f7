#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sangraph/date.hpp"
#include "sangraph/errors.hpp"

namespace sangraph {

enum class Action { Add, Revise, Remove };

std::string_view action_name(Action a);
Action action_from_name(std::string_view name);  // throws UnknownAction

// Fixed designation-reason taxonomy plus Unspecified for absent values.
enum class ReasonCategory {
  Unspecified,
  EvasionSupplyChain,
  ConventionalMilitary,
  WmdPrograms,
  Semiconductors,
  OtherUnknown,
  HumanRightsSurveillance,
  EnergyInfrastructure,
  CyberCommunications,
};

std::string_view reason_category_name(ReasonCategory c);
// Lenient: unknown labels map to Unspecified.
ReasonCategory reason_category_from_name(std::string_view name);

// Uppercases ISO 3166-1 alpha-2 codes and resolves a fixed table of country
// names (Hong Kong -> HK, Taiwan -> TW, ...). Throws BadCountryCode when the
// input is neither a two-letter code nor a known name.
std::string normalize_country(std::string_view raw);

// Placeholder code for records whose final target could not be resolved.
// Kept in summaries, excluded from role analytics outputs.
inline constexpr std::string_view kUnknownCountry = "XX";

// One regulatory action applied to one entity.
struct SanctionEvent {
  std::string event_id;
  Date date;
  std::string entity_name;
  std::vector<std::string> entity_aliases;
  std::string intermediate;          // country code of the listed entity
  std::vector<std::string> finals;   // country code(s) the action targets
  std::string reason;
  ReasonCategory reason_category = ReasonCategory::Unspecified;
  Action action = Action::Add;
  std::string source_doc;
};

// A designation life-cycle: one Add (fanned out per final target), optionally
// revised, optionally closed by a Remove.
struct Lifecycle {
  std::string edge_key;  // "<add event_id>/<final index>"
  std::string entity_name;
  std::string intermediate;
  std::string final_target;
  Date t_add;
  std::optional<Date> t_remove;        // nullopt = still in force
  std::vector<std::string> revisions;  // event_ids of matched Revise actions
};

enum class LinkWarningKind { UnmatchedRemove, UnmatchedRevise, ReAddition };

std::string_view link_warning_kind_name(LinkWarningKind k);

struct LinkWarning {
  LinkWarningKind kind;
  std::string event_id;
  std::string message;
};

struct LinkResult {
  std::vector<Lifecycle> lifecycles;
  std::vector<LinkWarning> warnings;
};

struct DatasetSummary {
  long long adds = 0;
  long long revises = 0;
  long long removes = 0;
  long long intermediate_countries = 0;
  long long final_countries = 0;
  std::optional<Date> first_date;
  std::optional<Date> last_date;

  long long total() const { return adds + revises + removes; }
};

// Validates and normalizes one structured key-value record.
// Throws MalformedDate, BadCountryCode, MissingFinal, UnknownAction, or Error
// for other schema violations.
SanctionEvent parse_event_record(const nlohmann::json& record);

// Inverse of parse_event_record for valid events; emits all ten fields.
nlohmann::json to_record(const SanctionEvent& event);

// Pairs Add/Revise/Remove actions into life-cycles. Input order is
// irrelevant: events are sorted by (date, event_id) internally. Anomalies
// (unmatched removes/revises, re-additions after removal) become warnings,
// never failures.
LinkResult link_lifecycles(std::vector<SanctionEvent> events);

DatasetSummary summarize(const std::vector<SanctionEvent>& events);

}  // namespace sangraph
