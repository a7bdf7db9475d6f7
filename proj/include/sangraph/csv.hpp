#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sangraph::csv {

// RFC 4180: quote fields containing comma, quote or newline; double quotes.
std::string escape(std::string_view field);

// Writes one record, LF terminated.
void write_row(std::ostream& out, const std::vector<std::string>& fields);

// Streaming RFC 4180 reader; handles quoted separators and embedded newlines.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}
  // nullopt at end of input. Empty lines yield a single empty field.
  std::optional<std::vector<std::string>> next_record();

 private:
  std::istream& in_;
};

// Plain split on a separator, no quoting; empty pieces are dropped.
std::vector<std::string> split_list(std::string_view text, char sep);

}  // namespace sangraph::csv
