// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cha::cli {

// One machine-readable result set: a named column layout plus pre-rendered
// cell strings. Cells are rendered once, deterministically, so CSV and JSON
// emission of the same record always produce identical bytes.
struct OutputRecord {
  std::string schema_version = "1";
  std::string command;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
  std::optional<std::int64_t> oracle_digits;
  std::optional<std::int64_t> timing_ms;

  void add_row(std::vector<std::string> cells);
};

enum class Format { csv, json };

Format parse_format(const std::string& name);

// CSV: header row plus data rows, '.' decimal separator, LF endings.
// Metadata and summary live in the JSON form; in CSV mode they are
// diagnostics, not data.
void emit(const OutputRecord& record, Format format, std::ostream& out);

// Writes to path, or to stdout when path is empty. I/O failures are
// reported with the path in the message.
void emit_to_destination(const OutputRecord& record, Format format, const std::string& path);

// Inverse of emit for round-tripping. parse_csv recovers columns and rows;
// parse_json recovers the full record.
OutputRecord parse_csv(std::istream& in);
OutputRecord parse_json(std::istream& in);

}  // namespace cha::cli
