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

// Flat `key = value` run configuration with `#` comments.

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gravmediate/params.hpp"

namespace gm::cli {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical result missed its tolerance (exit code 3).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Config {
 public:
  static Config parse(std::istream& in, const std::string& source = "<config>");
  static Config load(const std::filesystem::path& path);

  bool has(const std::string& key) const;
  std::string text(const std::string& key) const;
  std::string text(const std::string& key, const std::string& fallback) const;
  double number(const std::string& key) const;
  double number(const std::string& key, double fallback) const;
  long integer(const std::string& key, long fallback) const;
  std::vector<double> numbers(const std::string& key) const;
  std::vector<std::string> words(const std::string& key, const std::vector<std::string>& fallback) const;

  void set(const std::string& key, const std::string& value);

  /// Throws ConfigError naming every key no command consumed.
  void finish() const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  const Entry& entry(const std::string& key) const;
  std::string where(const std::string& key) const;

  std::string source_;
  std::map<std::string, Entry> entries_;
  mutable std::set<std::string> used_;
};

double parse_number(const std::string& text);

/// Model parameters from either the dimensionless block
/// (g_a, g_b, omega_tilde, omega_a, omega_b) or the SI block
/// (m_a, m_c, r, R, rho_a, rho_c, d, d0, D, omega, omega0, eps_r,
/// g_b_over_omega, V2_b, alpha, preset = silica). nbar0 and N are shared;
/// alpha sets R = alpha * r.
struct ModelBlock {
  ModelParams params;
  std::optional<PhysicalSetup> setup;
  std::optional<DerivedModel> derived;
};

bool has_si_block(const Config& cfg);
PhysicalSetup read_setup(const Config& cfg);
ModelBlock read_model(const Config& cfg);

struct RunConfig {
  std::string mode;
  Config values;
  std::filesystem::path out_dir = ".";
  std::uint64_t seed = 0;
  int jobs = 1;
};

}  // namespace gm::cli
