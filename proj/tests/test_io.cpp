#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sangraph/csv.hpp"
#include "sangraph/event_io.hpp"

using namespace sangraph;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sangraph_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

SanctionEvent sample_event() {
  SanctionEvent e;
  e.event_id = "E1";
  e.date = Date::parse("2024-05-09");
  e.entity_name = "Acme, \"Industrial\" Co";  // exercises CSV quoting
  e.entity_aliases = {"Acme Ind", "AIC"};
  e.intermediate = "DE";
  e.finals = {"RU", "IR"};
  e.reason = "supply of UAV components";
  e.reason_category = ReasonCategory::ConventionalMilitary;
  e.action = Action::Add;
  e.source_doc = "FR-2024-001";
  return e;
}

}  // namespace

TEST_CASE("csv escaping round trips through the reader") {
  CHECK(csv::escape("plain") == "plain");
  CHECK(csv::escape("a,b") == "\"a,b\"");
  CHECK(csv::escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv::escape("two\nlines") == "\"two\nlines\"");

  std::stringstream buf;
  csv::write_row(buf, {"a,b", "say \"hi\"", "two\nlines", ""});
  csv::Reader reader(buf);
  auto row = reader.next_record();
  REQUIRE(row.has_value());
  REQUIRE(row->size() == 4);
  CHECK((*row)[0] == "a,b");
  CHECK((*row)[1] == "say \"hi\"");
  CHECK((*row)[2] == "two\nlines");
  CHECK((*row)[3] == "");
  CHECK(!reader.next_record());
}

TEST_CASE("split_list drops empty pieces") {
  CHECK(csv::split_list("RU|IR", '|') == std::vector<std::string>{"RU", "IR"});
  CHECK(csv::split_list("", '|').empty());
  CHECK(csv::split_list("RU||IR|", '|') == std::vector<std::string>{"RU", "IR"});
}

TEST_CASE("jsonl round trip") {
  const std::vector<SanctionEvent> events = {sample_event()};
  const fs::path path = temp_file("roundtrip.jsonl");
  write_events(path, events);
  const ReadEventsResult result = read_events(path);
  CHECK(result.issues.empty());
  REQUIRE(result.events.size() == 1);
  CHECK(to_record(result.events[0]) == to_record(events[0]));
}

TEST_CASE("csv round trip with quoting and list fields") {
  const std::vector<SanctionEvent> events = {sample_event()};
  const fs::path path = temp_file("roundtrip.csv");
  write_events(path, events);
  const ReadEventsResult result = read_events(path);
  CHECK(result.issues.empty());
  REQUIRE(result.events.size() == 1);
  CHECK(to_record(result.events[0]) == to_record(events[0]));
  CHECK(result.events[0].finals == std::vector<std::string>{"RU", "IR"});
  CHECK(result.events[0].entity_aliases == std::vector<std::string>{"Acme Ind", "AIC"});
}

TEST_CASE("issues carry line numbers and bad records are skipped") {
  const fs::path path = temp_file("issues.jsonl");
  {
    std::ofstream out(path);
    out << to_record(sample_event()).dump() << "\n";
    nlohmann::json bad = to_record(sample_event());
    bad["event_id"] = "E2";
    bad["date"] = "2020-02-30";
    out << bad.dump() << "\n";
    out << "not json\n";
    out << to_record(sample_event()).dump() << "\n";  // duplicate id E1
  }
  const ReadEventsResult result = read_events(path);
  CHECK(result.events.size() == 1);
  REQUIRE(result.issues.size() == 3);
  CHECK(result.issues[0].line == 2);
  CHECK(result.issues[1].line == 3);
  CHECK(result.issues[2].line == 4);
  CHECK(result.issues[2].message.find("duplicate") != std::string::npos);
}

TEST_CASE("missing file raises IoError") {
  CHECK_THROWS_AS(read_events(temp_file("does_not_exist.jsonl")), IoError);
  CHECK_THROWS_AS(fnv1a64_file(temp_file("does_not_exist.jsonl")), IoError);
}

TEST_CASE("warning records serialize kind and event id") {
  const LinkWarning w{LinkWarningKind::UnmatchedRemove, "E9", "no open life-cycle"};
  const nlohmann::json record = warning_record(w);
  CHECK(record["kind"] == "UnmatchedRemove");
  CHECK(record["event_id"] == "E9");
}

TEST_CASE("fnv1a64 digest is stable") {
  const fs::path path = temp_file("digest.bin");
  {
    std::ofstream out(path, std::ios::binary);
  }
  CHECK(fnv1a64_file(path) == 14695981039346656037ULL);  // offset basis for empty input
  CHECK(hex64(14695981039346656037ULL) == "cbf29ce484222325");
  {
    std::ofstream out(path, std::ios::binary);
    out << "a";
  }
  CHECK(fnv1a64_file(path) == 0xaf63dc4c8601ec8cULL);
}
