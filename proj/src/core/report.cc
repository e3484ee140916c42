// Copyright 2026 The PET Fabric Authors
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

#include "core/report.h"

#include <charconv>
#include <cmath>

#include "core/error.h"

namespace petfabric {

namespace {

std::string ToChars(double v, std::chars_format fmt, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[400];
  const auto res = digits < 0 ? std::to_chars(buf, buf + sizeof(buf), v, fmt)
                              : std::to_chars(buf, buf + sizeof(buf), v, fmt,
                                              digits);
  if (res.ec != std::errc()) {
    throw Error(ErrorCode::kInternal, "number formatting failed");
  }
  return std::string(buf, res.ptr);
}

}  // namespace

std::string FormatFixed(double v, int digits) {
  std::string s = ToChars(v, std::chars_format::fixed, digits);
  // Rounding can produce "-0.000000".
  if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string FormatExact(double v) {
  return ToChars(v, std::chars_format::general, -1);
}

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void Table::AddRow(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw Error(ErrorCode::kInternal,
                "row of width " + std::to_string(row.size()) + " in table " +
                    name + " with " + std::to_string(columns.size()) +
                    " columns");
  }
  rows.push_back(std::move(row));
}

std::string Table::ToCsv() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += CsvField(fields[i]);
    }
    out += '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return out;
}

}  // namespace petfabric
