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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace riva {

// Canonical tabular format: comma-delimited, UTF-8, one header line,
// LF line endings. Values are serialized with 17 significant digits so
// a write/read round trip is lossless.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_table(const std::filesystem::path& path, const Table& table);
Table read_table(const std::filesystem::path& path);

// Atomic text write used by every file-producing stage: the payload is
// staged in a sibling temp file and renamed over the target.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

// Intraday prices keyed by (trading day, minute-of-day slot).
struct PriceRecord {
  std::int64_t day = 0;
  std::int32_t slot = 0;
  double price = 0.0;
};

struct PriceSeries {
  std::vector<PriceRecord> records;  // sorted by (day, slot), no duplicates
  std::int32_t slots_per_day = 0;
};

struct PriceCsvSchema {
  int day_column = 0;
  int slot_column = 1;
  int price_column = 2;
  std::int32_t slots_per_day = 0;
};

// Loads and validates a price CSV. Rows that violate the ordering or
// value invariants are rejected with the offending line number; the
// input is never silently reordered.
PriceSeries load_price_csv(const std::filesystem::path& path, const PriceCsvSchema& schema);

}  // namespace riva
