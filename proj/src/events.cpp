#include "sangraph/events.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

namespace sangraph {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Country names appearing in source tables alongside ISO codes, including
// the non-ISO labels Hong Kong, Taiwan, Macau and British Virgin Islands.
const std::unordered_map<std::string, std::string>& country_name_table() {
  static const std::unordered_map<std::string, std::string> table = {
      {"afghanistan", "AF"},
      {"argentina", "AR"},
      {"australia", "AU"},
      {"bahrain", "BH"},
      {"belarus", "BY"},
      {"belgium", "BE"},
      {"bolivia", "BO"},
      {"brazil", "BR"},
      {"british virgin islands", "VG"},
      {"canada", "CA"},
      {"cayman islands", "KY"},
      {"chile", "CL"},
      {"china", "CN"},
      {"costa rica", "CR"},
      {"cuba", "CU"},
      {"cyprus", "CY"},
      {"denmark", "DK"},
      {"egypt", "EG"},
      {"finland", "FI"},
      {"france", "FR"},
      {"germany", "DE"},
      {"hong kong", "HK"},
      {"india", "IN"},
      {"iran", "IR"},
      {"iraq", "IQ"},
      {"israel", "IL"},
      {"italy", "IT"},
      {"jamaica", "JM"},
      {"japan", "JP"},
      {"kenya", "KE"},
      {"laos", "LA"},
      {"madagascar", "MG"},
      {"macau", "MO"},
      {"macao", "MO"},
      {"malaysia", "MY"},
      {"mexico", "MX"},
      {"morocco", "MA"},
      {"myanmar", "MM"},
      {"netherlands", "NL"},
      {"new zealand", "NZ"},
      {"north korea", "KP"},
      {"norway", "NO"},
      {"pakistan", "PK"},
      {"panama", "PA"},
      {"peru", "PE"},
      {"philippines", "PH"},
      {"portugal", "PT"},
      {"qatar", "QA"},
      {"romania", "RO"},
      {"russia", "RU"},
      {"singapore", "SG"},
      {"south africa", "ZA"},
      {"south korea", "KR"},
      {"sri lanka", "LK"},
      {"sweden", "SE"},
      {"switzerland", "CH"},
      {"syria", "SY"},
      {"taiwan", "TW"},
      {"thailand", "TH"},
      {"turkey", "TR"},
      {"uae", "AE"},
      {"uk", "GB"},
      {"ukraine", "UA"},
      {"united arab emirates", "AE"},
      {"united kingdom", "GB"},
      {"united states", "US"},
      {"vietnam", "VN"},
  };
  return table;
}

bool is_alpha2(std::string_view s) {
  return s.size() == 2 && std::isalpha(static_cast<unsigned char>(s[0])) &&
         std::isalpha(static_cast<unsigned char>(s[1]));
}

const nlohmann::json* find_field(const nlohmann::json& record, const char* key) {
  auto it = record.find(key);
  if (it == record.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string string_field(const nlohmann::json& record, const char* key) {
  const nlohmann::json* v = find_field(record, key);
  if (!v) return {};
  if (!v->is_string()) throw Error(std::string("field \"") + key + "\" must be a string");
  return trim(v->get<std::string>());
}

std::vector<std::string> string_list_field(const nlohmann::json& record, const char* key) {
  const nlohmann::json* v = find_field(record, key);
  if (!v) return {};
  if (!v->is_array())
    throw Error(std::string("field \"") + key + "\" must be an array of strings");
  std::vector<std::string> out;
  out.reserve(v->size());
  for (const auto& item : *v) {
    if (!item.is_string())
      throw Error(std::string("field \"") + key + "\" must be an array of strings");
    std::string s = trim(item.get<std::string>());
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::string_view action_name(Action a) {
  switch (a) {
    case Action::Add:
      return "Add";
    case Action::Revise:
      return "Revise";
    case Action::Remove:
      return "Remove";
  }
  return "Add";
}

Action action_from_name(std::string_view name) {
  const std::string n = lower(trim(name));
  if (n == "add") return Action::Add;
  if (n == "revise") return Action::Revise;
  if (n == "remove") return Action::Remove;
  throw UnknownAction("unknown action: \"" + std::string(name) + "\"");
}

std::string_view reason_category_name(ReasonCategory c) {
  switch (c) {
    case ReasonCategory::Unspecified:
      return "Unspecified";
    case ReasonCategory::EvasionSupplyChain:
      return "Evasion & Supply-Chain Facilitation";
    case ReasonCategory::ConventionalMilitary:
      return "Conventional Military & Defense Systems";
    case ReasonCategory::WmdPrograms:
      return "WMD Programs & Delivery Systems";
    case ReasonCategory::Semiconductors:
      return "Semiconductors & Advanced Computing";
    case ReasonCategory::OtherUnknown:
      return "Other/Unknown";
    case ReasonCategory::HumanRightsSurveillance:
      return "Human Rights & Surveillance";
    case ReasonCategory::EnergyInfrastructure:
      return "Energy & Critical Infrastructure";
    case ReasonCategory::CyberCommunications:
      return "Cyber & Secure Communications";
  }
  return "Unspecified";
}

ReasonCategory reason_category_from_name(std::string_view name) {
  static const std::map<std::string, ReasonCategory> table = [] {
    std::map<std::string, ReasonCategory> t;
    for (ReasonCategory c :
         {ReasonCategory::Unspecified, ReasonCategory::EvasionSupplyChain,
          ReasonCategory::ConventionalMilitary, ReasonCategory::WmdPrograms,
          ReasonCategory::Semiconductors, ReasonCategory::OtherUnknown,
          ReasonCategory::HumanRightsSurveillance, ReasonCategory::EnergyInfrastructure,
          ReasonCategory::CyberCommunications}) {
      t.emplace(lower(reason_category_name(c)), c);
    }
    return t;
  }();
  auto it = table.find(lower(trim(name)));
  return it == table.end() ? ReasonCategory::Unspecified : it->second;
}

std::string normalize_country(std::string_view raw) {
  const std::string t = trim(raw);
  if (t.empty()) throw BadCountryCode("empty country code");
  if (is_alpha2(t)) {
    std::string code = t;
    for (char& c : code) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return code;
  }
  const auto& names = country_name_table();
  auto it = names.find(lower(t));
  if (it != names.end()) return it->second;
  throw BadCountryCode("not a country code or known country name: \"" + t + "\"");
}

SanctionEvent parse_event_record(const nlohmann::json& record) {
  if (!record.is_object()) throw Error("event record must be a JSON object");

  SanctionEvent ev;
  ev.event_id = string_field(record, "event_id");

  const std::string date_text = string_field(record, "date");
  if (date_text.empty()) throw MalformedDate("missing date");
  ev.date = Date::parse(date_text);

  ev.entity_name = string_field(record, "entity_name");
  if (ev.entity_name.empty()) throw Error("missing entity_name");

  ev.entity_aliases = string_list_field(record, "entity_aliases");

  const std::string intermediate = string_field(record, "intermediate");
  if (intermediate.empty()) throw BadCountryCode("missing intermediate country");
  ev.intermediate = normalize_country(intermediate);

  for (const std::string& f : string_list_field(record, "finals")) {
    ev.finals.push_back(normalize_country(f));
  }

  ev.reason = string_field(record, "reason");
  ev.reason_category = reason_category_from_name(string_field(record, "reason_category"));

  const std::string action_text = string_field(record, "action");
  if (action_text.empty()) throw UnknownAction("missing action");
  ev.action = action_from_name(action_text);

  ev.source_doc = string_field(record, "source_doc");

  if (ev.action == Action::Add && ev.finals.empty()) {
    throw MissingFinal("Add event \"" + ev.event_id + "\" has no final target");
  }
  return ev;
}

nlohmann::json to_record(const SanctionEvent& event) {
  nlohmann::json r;
  r["event_id"] = event.event_id;
  r["date"] = event.date.to_string();
  r["entity_name"] = event.entity_name;
  r["entity_aliases"] = event.entity_aliases;
  r["intermediate"] = event.intermediate;
  r["finals"] = event.finals;
  r["reason"] = event.reason;
  r["reason_category"] = reason_category_name(event.reason_category);
  r["action"] = action_name(event.action);
  r["source_doc"] = event.source_doc;
  return r;
}

std::string_view link_warning_kind_name(LinkWarningKind k) {
  switch (k) {
    case LinkWarningKind::UnmatchedRemove:
      return "UnmatchedRemove";
    case LinkWarningKind::UnmatchedRevise:
      return "UnmatchedRevise";
    case LinkWarningKind::ReAddition:
      return "ReAddition";
  }
  return "UnmatchedRemove";
}

LinkResult link_lifecycles(std::vector<SanctionEvent> events) {
  std::sort(events.begin(), events.end(), [](const SanctionEvent& a, const SanctionEvent& b) {
    if (a.date != b.date) return a.date < b.date;
    return a.event_id < b.event_id;
  });

  LinkResult result;
  result.lifecycles.reserve(events.size());

  // Matching key: (entity name, case-insensitive; intermediate country).
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> open;
  std::set<std::pair<std::string, std::string>> ever_closed;

  for (const SanctionEvent& ev : events) {
    const auto key = std::make_pair(lower(ev.entity_name), ev.intermediate);
    switch (ev.action) {
      case Action::Add: {
        if (ever_closed.count(key)) {
          result.warnings.push_back(
              {LinkWarningKind::ReAddition, ev.event_id,
               "entity \"" + ev.entity_name + "\" re-added at " + ev.intermediate +
                   " after a prior removal; starting new life-cycles"});
        }
        for (std::size_t i = 0; i < ev.finals.size(); ++i) {
          Lifecycle lc;
          lc.edge_key = ev.event_id + "/" + std::to_string(i);
          lc.entity_name = ev.entity_name;
          lc.intermediate = ev.intermediate;
          lc.final_target = ev.finals[i];
          lc.t_add = ev.date;
          open[key].push_back(result.lifecycles.size());
          result.lifecycles.push_back(std::move(lc));
        }
        break;
      }
      case Action::Remove: {
        auto it = open.find(key);
        if (it == open.end() || it->second.empty()) {
          result.warnings.push_back(
              {LinkWarningKind::UnmatchedRemove, ev.event_id,
               "remove for \"" + ev.entity_name + "\" at " + ev.intermediate +
                   " matched no open life-cycle"});
          break;
        }
        for (std::size_t idx : it->second) {
          result.lifecycles[idx].t_remove = ev.date;
        }
        it->second.clear();
        ever_closed.insert(key);
        break;
      }
      case Action::Revise: {
        auto it = open.find(key);
        if (it == open.end() || it->second.empty()) {
          result.warnings.push_back(
              {LinkWarningKind::UnmatchedRevise, ev.event_id,
               "revise for \"" + ev.entity_name + "\" at " + ev.intermediate +
                   " matched no open life-cycle"});
          break;
        }
        for (std::size_t idx : it->second) {
          result.lifecycles[idx].revisions.push_back(ev.event_id);
        }
        break;
      }
    }
  }
  return result;
}

DatasetSummary summarize(const std::vector<SanctionEvent>& events) {
  DatasetSummary s;
  std::set<std::string> intermediates;
  std::set<std::string> finals;
  for (const SanctionEvent& ev : events) {
    switch (ev.action) {
      case Action::Add:
        ++s.adds;
        break;
      case Action::Revise:
        ++s.revises;
        break;
      case Action::Remove:
        ++s.removes;
        break;
    }
    intermediates.insert(ev.intermediate);
    for (const std::string& f : ev.finals) finals.insert(f);
    if (!s.first_date || ev.date < *s.first_date) s.first_date = ev.date;
    if (!s.last_date || ev.date > *s.last_date) s.last_date = ev.date;
  }
  s.intermediate_countries = static_cast<long long>(intermediates.size());
  s.final_countries = static_cast<long long>(finals.size());
  return s;
}

}  // namespace sangraph
