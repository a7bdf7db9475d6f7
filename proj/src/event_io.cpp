#include "sangraph/event_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "sangraph/csv.hpp"

namespace sangraph {

namespace {

const std::vector<std::string>& csv_header() {
  static const std::vector<std::string> header = {
      "event_id", "date",   "entity_name",     "entity_aliases", "intermediate",
      "finals",   "reason", "reason_category", "action",         "source_doc"};
  return header;
}

nlohmann::json csv_row_to_record(const std::vector<std::string>& header,
                                 const std::vector<std::string>& row) {
  nlohmann::json record = nlohmann::json::object();
  for (std::size_t i = 0; i < header.size() && i < row.size(); ++i) {
    const std::string& name = header[i];
    if (name == "finals" || name == "entity_aliases") {
      record[name] = csv::split_list(row[i], '|');
    } else {
      record[name] = row[i];
    }
  }
  return record;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out.push_back('|');
    out += items[i];
  }
  return out;
}

}  // namespace

RecordFormat detect_format(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? RecordFormat::Csv : RecordFormat::Jsonl;
}

ReadEventsResult read_events(const std::filesystem::path& path, RecordFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path.string());
  if (format == RecordFormat::Auto) format = detect_format(path);

  ReadEventsResult result;
  std::set<std::string> seen_ids;

  auto add_event = [&](long line, SanctionEvent ev) {
    if (!ev.event_id.empty() && !seen_ids.insert(ev.event_id).second) {
      result.issues.push_back({line, "duplicate event_id \"" + ev.event_id + "\""});
      return;
    }
    result.events.push_back(std::move(ev));
  };

  if (format == RecordFormat::Jsonl) {
    std::string line_text;
    long line = 0;
    while (std::getline(in, line_text)) {
      ++line;
      if (line_text.find_first_not_of(" \t\r") == std::string::npos) continue;
      nlohmann::json record = nlohmann::json::parse(line_text, nullptr, false);
      if (record.is_discarded()) {
        result.issues.push_back({line, "invalid JSON record"});
        continue;
      }
      try {
        add_event(line, parse_event_record(record));
      } catch (const Error& e) {
        result.issues.push_back({line, e.what()});
      }
    }
  } else {
    csv::Reader reader(in);
    auto header_row = reader.next_record();
    if (!header_row) return result;
    for (std::string& h : *header_row) {
      h.erase(std::remove(h.begin(), h.end(), '\r'), h.end());
    }
    const auto& expected = csv_header();
    for (const std::string& name : expected) {
      if (std::find(header_row->begin(), header_row->end(), name) == header_row->end()) {
        result.issues.push_back({1, "missing CSV column \"" + name + "\""});
        return result;
      }
    }
    long line = 1;
    while (auto row = reader.next_record()) {
      ++line;
      if (row->size() == 1 && (*row)[0].empty()) continue;
      try {
        add_event(line, parse_event_record(csv_row_to_record(*header_row, *row)));
      } catch (const Error& e) {
        result.issues.push_back({line, e.what()});
      }
    }
  }
  return result;
}

void write_events_jsonl(std::ostream& out, const std::vector<SanctionEvent>& events) {
  for (const SanctionEvent& ev : events) {
    out << to_record(ev).dump() << '\n';
  }
}

void write_events_csv(std::ostream& out, const std::vector<SanctionEvent>& events) {
  csv::write_row(out, csv_header());
  for (const SanctionEvent& ev : events) {
    csv::write_row(out, {ev.event_id, ev.date.to_string(), ev.entity_name,
                         join_list(ev.entity_aliases), ev.intermediate, join_list(ev.finals),
                         ev.reason, std::string(reason_category_name(ev.reason_category)),
                         std::string(action_name(ev.action)), ev.source_doc});
  }
}

void write_events(const std::filesystem::path& path, const std::vector<SanctionEvent>& events,
                  RecordFormat format) {
  if (format == RecordFormat::Auto) format = detect_format(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path.string());
  if (format == RecordFormat::Csv) {
    write_events_csv(out, events);
  } else {
    write_events_jsonl(out, events);
  }
  if (!out) throw IoError("failed writing: " + path.string());
}

nlohmann::json warning_record(const LinkWarning& warning) {
  return nlohmann::json{{"kind", link_warning_kind_name(warning.kind)},
                        {"event_id", warning.event_id},
                        {"message", warning.message}};
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for digest: " + path.string());
  std::uint64_t hash = 14695981039346656037ULL;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    const std::streamsize n = in.gcount();
    for (std::streamsize i = 0; i < n; ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 1099511628211ULL;
    }
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

}  // namespace sangraph
