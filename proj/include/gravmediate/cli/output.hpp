// Copyright 2026 The gravmediate Authors
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

// CSV and JSON emission for the command-line front end.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace gm::cli {

using Json = nlohmann::ordered_json;

/// Shortest text that parses back to the same double ("%.17g").
std::string format_double(double v);

/// RFC-4180 field quoting (only when the field needs it).
std::string csv_field(const std::string& s);

/// One CSV file built in memory and written in a single call; a missing
/// optional cell becomes an empty field.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  using Cell = std::optional<double>;
  void add_row(const std::vector<Cell>& row);
  void add_row(const std::vector<std::string>& row);
  std::string str() const;
  void write(const std::filesystem::path& path) const;
  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::string> rows_;
};

void write_json(const std::filesystem::path& path, const Json& j);

/// `{"value": v, "formula": text}` entry for derived quantities.
Json quantity(double value, const std::string& formula);

/// A number, or null when not finite.
Json number_or_null(double v);

}  // namespace gm::cli
