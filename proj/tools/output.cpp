// SPDX-License-Identifier: Apache-2.0
#include "output.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cha::cli {

namespace {

void check_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") != std::string::npos) {
    throw std::logic_error("output cell contains CSV metacharacters: '" + cell + "'");
  }
}

void emit_csv(const OutputRecord& record, std::ostream& out) {
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    check_cell(record.columns[i]);
    out << record.columns[i] << (i + 1 < record.columns.size() ? "," : "");
  }
  out << '\n';
  for (const auto& row : record.rows) {
    if (row.size() != record.columns.size()) {
      throw std::logic_error("output row width does not match the column layout");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      check_cell(row[i]);
      out << row[i] << (i + 1 < row.size() ? "," : "");
    }
    out << '\n';
  }
}

void emit_json(const OutputRecord& record, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = record.schema_version;
  doc["command"] = record.command;
  if (record.p) doc["p"] = *record.p;
  if (record.q) doc["q"] = *record.q;
  if (record.oracle_digits) doc["oracle_digits"] = *record.oracle_digits;
  if (record.timing_ms) doc["timing_ms"] = *record.timing_ms;
  doc["columns"] = record.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    if (row.size() != record.columns.size()) {
      throw std::logic_error("output row width does not match the column layout");
    }
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[record.columns[i]] = row[i];
    doc["rows"].push_back(std::move(obj));
  }
  if (!record.summary.empty()) {
    nlohmann::ordered_json sm;
    for (const auto& [key, value] : record.summary) sm[key] = value;
    doc["summary"] = std::move(sm);
  }
  out << doc.dump(2) << '\n';
}

}  // namespace

void OutputRecord::add_row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown output format '" + name + "' (expected csv or json)");
}

void emit(const OutputRecord& record, Format format, std::ostream& out) {
  if (format == Format::csv) {
    emit_csv(record, out);
  } else {
    emit_json(record, out);
  }
}

void emit_to_destination(const OutputRecord& record, Format format, const std::string& path) {
  if (path.empty()) {
    emit(record, format, std::cout);
    if (!std::cout) throw std::runtime_error("write to stdout failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  emit(record, format, out);
  out.flush();
  if (!out) throw std::runtime_error("write to output file '" + path + "' failed");
}

OutputRecord parse_csv(std::istream& in) {
  OutputRecord record;
  std::string line;
  auto split = [](const std::string& text) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(text);
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    if (!text.empty() && text.back() == ',') cells.emplace_back();
    return cells;
  };
  if (!std::getline(in, line)) throw std::runtime_error("parse_csv: missing header row");
  record.columns = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != record.columns.size()) {
      throw std::runtime_error("parse_csv: row width does not match the header");
    }
    record.rows.push_back(std::move(cells));
  }
  return record;
}

OutputRecord parse_json(std::istream& in) {
  const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(in);
  OutputRecord record;
  record.schema_version = doc.at("schema_version").get<std::string>();
  record.command = doc.at("command").get<std::string>();
  if (doc.contains("p")) record.p = doc["p"].get<std::int64_t>();
  if (doc.contains("q")) record.q = doc["q"].get<std::int64_t>();
  if (doc.contains("oracle_digits")) record.oracle_digits = doc["oracle_digits"].get<std::int64_t>();
  if (doc.contains("timing_ms")) record.timing_ms = doc["timing_ms"].get<std::int64_t>();
  record.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& row : doc.at("rows")) {
    std::vector<std::string> cells;
    for (const auto& column : record.columns) cells.push_back(row.at(column).get<std::string>());
    record.rows.push_back(std::move(cells));
  }
  if (doc.contains("summary")) {
    for (const auto& [key, value] : doc["summary"].items()) {
      record.summary.emplace_back(key, value.get<std::string>());
    }
  }
  return record;
}

}  // namespace cha::cli
