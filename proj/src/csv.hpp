#pragma once

// Minimal RFC 4180 style record reader: quoted fields with doubled quotes,
// no embedded newlines.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace bec::csv {

struct Record {
  int line = 0;
  std::vector<std::string> fields;
};

/// Splits one line; throws ParseError on an unterminated quote.
std::vector<std::string> split(std::string_view line, int line_number);

/// Reads records, skipping blank lines and lines starting with '#'.
/// Fields are trimmed of surrounding whitespace.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}
  bool next(Record& record);

 private:
  std::istream& in_;
  int line_ = 0;
};

/// Throws ParseError unless `record` matches `expected` (case-insensitive).
void expect_header(const Record& record, const std::vector<std::string_view>& expected);

/// Quotes a field if it holds a comma or quote.
std::string escape(std::string_view field);

}  // namespace bec::csv
