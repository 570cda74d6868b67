// Copyright 2026 The riva Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "riva/table.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <system_error>

#include "riva/error.hpp"

namespace riva {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double parse_double(const std::string& field, std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  double value = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0' || errno == ERANGE) {
    fail(errc::parse_error,
         "line " + std::to_string(line_no) + ": cannot parse '" + field + "' as a real");
  }
  return value;
}

std::int64_t parse_int(const std::string& field, std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  long long value = std::strtoll(field.c_str(), &end, 10);
  if (end == field.c_str() || *end != '\0' || errno == ERANGE) {
    fail(errc::parse_error,
         "line " + std::to_string(line_no) + ": cannot parse '" + field + "' as an integer");
  }
  return static_cast<std::int64_t>(value);
}

void format_value(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::unwritable_path, "cannot open '" + tmp.string() + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) fail(errc::unwritable_path, "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(errc::unwritable_path, "cannot rename temp file onto '" + path.string() + "'");
}

void write_table(const std::filesystem::path& path, const Table& table) {
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      fail(errc::length_mismatch, "row arity " + std::to_string(row.size()) +
                                      " != column count " + std::to_string(table.columns.size()));
    }
  }
  std::string text;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) text += ',';
    text += table.columns[i];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += ',';
      format_value(text, row[i]);
    }
    text += '\n';
  }
  write_text_atomic(path, text);
}

Table read_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::missing_file, "cannot open '" + path.string() + "'");

  Table table;
  std::string line;
  if (!std::getline(in, line)) fail(errc::parse_error, "empty file, header expected");
  table.columns = split_csv_line(strip_cr(line));

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != table.columns.size()) {
      fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(table.columns.size()) + " fields, got " +
                                  std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_double(f, line_no));
    table.rows.push_back(std::move(row));
  }
  return table;
}

PriceSeries load_price_csv(const std::filesystem::path& path, const PriceCsvSchema& schema) {
  if (schema.slots_per_day <= 0) {
    fail(errc::invalid_config, "slots_per_day must be positive");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::missing_file, "cannot open '" + path.string() + "'");

  const std::size_t needed = static_cast<std::size_t>(
      std::max({schema.day_column, schema.slot_column, schema.price_column}) + 1);

  PriceSeries series;
  series.slots_per_day = schema.slots_per_day;

  std::string line;
  if (!std::getline(in, line)) fail(errc::parse_error, "empty file, header expected");

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() < needed) {
      fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected at least " +
                                  std::to_string(needed) + " fields, got " +
                                  std::to_string(fields.size()));
    }
    PriceRecord rec;
    rec.day = parse_int(fields[static_cast<std::size_t>(schema.day_column)], line_no);
    const std::int64_t slot = parse_int(fields[static_cast<std::size_t>(schema.slot_column)], line_no);
    rec.price = parse_double(fields[static_cast<std::size_t>(schema.price_column)], line_no);

    if (rec.day < 0) {
      fail(errc::parse_error, "line " + std::to_string(line_no) + ": negative day index");
    }
    if (slot < 0 || slot >= schema.slots_per_day) {
      fail(errc::invalid_slot, "line " + std::to_string(line_no) + ": slot " +
                                   std::to_string(slot) + " outside [0, " +
                                   std::to_string(schema.slots_per_day) + ")");
    }
    rec.slot = static_cast<std::int32_t>(slot);
    if (!(rec.price > 0.0)) {
      fail(errc::non_positive_price,
           "line " + std::to_string(line_no) + ": price " + std::to_string(rec.price));
    }
    if (!series.records.empty()) {
      const PriceRecord& prev = series.records.back();
      if (rec.day < prev.day || (rec.day == prev.day && rec.slot < prev.slot)) {
        fail(errc::unsorted_input,
             "line " + std::to_string(line_no) + ": rows must be sorted by (day, slot)");
      }
      if (rec.day == prev.day && rec.slot == prev.slot) {
        fail(errc::duplicate_slot, "line " + std::to_string(line_no) + ": duplicate (day " +
                                       std::to_string(rec.day) + ", slot " +
                                       std::to_string(rec.slot) + ")");
      }
    }
    series.records.push_back(rec);
  }
  return series;
}

}  // namespace riva
