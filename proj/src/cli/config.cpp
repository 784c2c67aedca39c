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

#include "gravmediate/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace gm::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::set<std::string> kSiKeys = {"m_a",   "m_c",    "r",     "R",     "rho_a",
                                       "rho_c", "d",      "d0",    "D",     "omega",
                                       "omega0", "eps_r", "g_b_over_omega", "V2_b",
                                       "alpha", "preset"};
const std::set<std::string> kDimensionlessKeys = {"g_a", "g_b", "omega_tilde", "omega_a",
                                                  "omega_b"};

}  // namespace

double parse_number(const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (t.empty() || res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    throw ConfigError("not a finite number: '" + text + "'");
  }
  return v;
}

Config Config::parse(std::istream& in, const std::string& source) {
  Config cfg;
  cfg.source_ = source;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source + ":" + std::to_string(no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(source + ":" + std::to_string(no) + ": empty key");
    }
    if (cfg.entries_.count(key)) {
      throw ConfigError(source + ":" + std::to_string(no) + ": duplicate key '" + key + "'");
    }
    cfg.entries_[key] = {value, no};
  }
  return cfg;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse(in, path.string());
}

bool Config::has(const std::string& key) const { return entries_.count(key) != 0; }

const Config::Entry& Config::entry(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw ConfigError(source_ + ": missing required key '" + key + "'");
  used_.insert(key);
  return it->second;
}

std::string Config::where(const std::string& key) const {
  const auto it = entries_.find(key);
  return source_ + ":" + std::to_string(it == entries_.end() ? 0 : it->second.line) + ": key '" +
         key + "'";
}

std::string Config::text(const std::string& key) const { return entry(key).value; }

std::string Config::text(const std::string& key, const std::string& fallback) const {
  return has(key) ? text(key) : fallback;
}

double Config::number(const std::string& key) const {
  try {
    return parse_number(entry(key).value);
  } catch (const ConfigError& e) {
    if (!has(key)) throw;
    throw ConfigError(where(key) + ": " + e.what());
  }
}

double Config::number(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

long Config::integer(const std::string& key, long fallback) const {
  if (!has(key)) return fallback;
  const double v = number(key);
  if (v != std::floor(v) || std::abs(v) > 9.0e15) throw ConfigError(where(key) + ": expected an integer");
  return static_cast<long>(v);
}

std::vector<double> Config::numbers(const std::string& key) const {
  std::vector<double> out;
  for (const auto& w : words(key, {})) {
    try {
      out.push_back(parse_number(w));
    } catch (const ConfigError& e) {
      throw ConfigError(where(key) + ": " + e.what());
    }
  }
  return out;
}

std::vector<std::string> Config::words(const std::string& key,
                                       const std::vector<std::string>& fallback) const {
  if (!has(key)) return fallback;
  std::vector<std::string> out;
  std::stringstream ss(entry(key).value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void Config::set(const std::string& key, const std::string& value) { entries_[key] = {value, 0}; }

void Config::finish() const {
  std::vector<std::string> unused;
  for (const auto& [k, e] : entries_) {
    if (!used_.count(k)) unused.push_back(k);
  }
  if (unused.empty()) return;
  std::string msg = source_ + ": unknown or unused keys:";
  for (const auto& k : unused) msg += " " + k;
  throw ConfigError(msg);
}

bool has_si_block(const Config& cfg) {
  return std::any_of(kSiKeys.begin(), kSiKeys.end(), [&](const auto& k) { return cfg.has(k); });
}

PhysicalSetup read_setup(const Config& cfg) {
  PhysicalSetup s;
  const double alpha = cfg.number("alpha", 100.0);
  if (cfg.has("preset")) {
    const std::string preset = cfg.text("preset");
    if (preset != "silica") throw ConfigError("unknown preset '" + preset + "' (known: silica)");
    s = PhysicalSetup::silica_example(alpha);
  }
  s.m_a = cfg.number("m_a", s.m_a);
  s.m_c = cfg.number("m_c", s.m_c);
  s.r = cfg.number("r", s.r);
  s.R = cfg.number("R", s.R);
  if (cfg.has("alpha")) s.R = alpha * s.r;
  s.rho_a = cfg.number("rho_a", s.rho_a);
  s.rho_c = cfg.number("rho_c", s.rho_c);
  s.d = cfg.number("d", s.d);
  s.d0 = cfg.number("d0", s.d0);
  s.D = cfg.number("D", s.D);
  s.omega = cfg.number("omega", s.omega);
  s.omega0 = cfg.number("omega0", s.omega0);
  s.eps_r = cfg.number("eps_r", s.eps_r);
  s.g_b_over_omega = cfg.number("g_b_over_omega", s.g_b_over_omega);
  s.V2_b = cfg.number("V2_b", s.V2_b);
  s.nbar0 = cfg.number("nbar0", 0.0);
  return s;
}

ModelBlock read_model(const Config& cfg) {
  const bool si = has_si_block(cfg);
  const bool dimless = std::any_of(kDimensionlessKeys.begin(), kDimensionlessKeys.end(),
                                   [&](const auto& k) { return cfg.has(k); });
  if (si && dimless) {
    throw ConfigError("config mixes SI and dimensionless parameter blocks; use one of them");
  }
  const long n_override = cfg.integer("N", 0);
  if (n_override < 0 || n_override == 1) throw ConfigError("N must be >= 2 (or omitted)");
  ModelBlock out;
  try {
    if (si) {
      out.setup = read_setup(cfg);
      out.derived = derive_model(*out.setup);
      out.params = out.derived->params;
    } else {
      ModelParams p;
      p.omega_tilde = cfg.number("omega_tilde", 1.0);
      p.omega_a = cfg.number("omega_a", 0.0);
      p.omega_b = cfg.number("omega_b", 0.0);
      p.g_a = cfg.number("g_a") * p.omega_tilde;
      p.g_b = cfg.number("g_b") * p.omega_tilde;
      p.nbar0 = cfg.number("nbar0", 0.0);
      p.N = 2;
      p.validate();
      p.N = suggest_truncation(p);
      out.params = p;
    }
    if (n_override > 0) out.params.N = n_override;
    out.params.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid model parameters: ") + e.what());
  }
  return out;
}

}  // namespace gm::cli
