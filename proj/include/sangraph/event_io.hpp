#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sangraph/events.hpp"

namespace sangraph {

// Dataset files are newline-delimited JSON records or a CSV variant with
// `finals` and `entity_aliases` as '|'-separated lists.
enum class RecordFormat { Auto, Jsonl, Csv };

RecordFormat detect_format(const std::filesystem::path& path);

struct ParseIssue {
  long line = 0;
  std::string message;
};

struct ReadEventsResult {
  std::vector<SanctionEvent> events;
  std::vector<ParseIssue> issues;  // empty iff every record parsed cleanly
};

// Reads a dataset file, collecting per-line issues instead of failing fast.
// Duplicate event_id values are reported as issues. Throws IoError when the
// file cannot be opened.
ReadEventsResult read_events(const std::filesystem::path& path,
                             RecordFormat format = RecordFormat::Auto);

void write_events_jsonl(std::ostream& out, const std::vector<SanctionEvent>& events);
void write_events_csv(std::ostream& out, const std::vector<SanctionEvent>& events);
void write_events(const std::filesystem::path& path,
                  const std::vector<SanctionEvent>& events,
                  RecordFormat format = RecordFormat::Auto);

// Structured diagnostics-stream form of a link warning.
nlohmann::json warning_record(const LinkWarning& warning);

// FNV-1a 64-bit content digest, used in run manifests. Throws IoError.
std::uint64_t fnv1a64_file(const std::filesystem::path& path);
std::string hex64(std::uint64_t value);

}  // namespace sangraph
