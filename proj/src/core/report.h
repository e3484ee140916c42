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

// CSV tables: RFC 4180 quoting, LF line endings, '.' as decimal separator
// regardless of locale.

#ifndef PETFABRIC_CORE_REPORT_H_
#define PETFABRIC_CORE_REPORT_H_

#include <cstdint>
#include <string>
#include <vector>

namespace petfabric {

// Fixed notation with `digits` decimals.
std::string FormatFixed(double v, int digits = 6);

// Shortest text that parses back to exactly `v`.
std::string FormatExact(double v);

std::string CsvField(const std::string& field);

struct Table {
  // File name the table is written to.
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  // Throws kInternal when a row's width differs from the header's.
  void AddRow(std::vector<std::string> row);

  std::string ToCsv() const;
};

struct Report {
  std::vector<Table> tables;
  // Human-readable lines for the terminal.
  std::vector<std::string> summary;
};

}  // namespace petfabric

#endif  // PETFABRIC_CORE_REPORT_H_
