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

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "gravmediate/cli/commands.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 2, kNumericalError = 3 };

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("gravmediate");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* env = std::getenv("GRAVMEDIATE_LOG");
  const std::string level = env ? env : "warn";
  if (level == "error") spdlog::set_level(spdlog::level::err);
  else if (level == "warn") spdlog::set_level(spdlog::level::warn);
  else if (level == "info") spdlog::set_level(spdlog::level::info);
  else if (level == "debug") spdlog::set_level(spdlog::level::debug);
  else {
    spdlog::set_level(spdlog::level::warn);
    spdlog::warn("GRAVMEDIATE_LOG='{}' not one of error, warn, info, debug; using warn", level);
  }
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"gravmediate: mediator-assisted gravitational entanglement toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  int jobs = 1;
  std::uint64_t seed = 0;
  const std::map<std::string, std::string> about = {
      {"simulate", "entanglement time series and decoupling-time summary"},
      {"sweep", "LN at the first decoupling time over one parameter axis"},
      {"design", "derived couplings and the coupling bound for an SI setup"},
      {"casimir", "minimum separation where Casimir stays below gravity"},
      {"enhance", "enhancement factor versus mediator size ratio"},
      {"noise-dd", "dephasing Monte Carlo with and without decoupling pulses"},
  };
  for (const auto& mode : gm::cli::mode_names()) {
    auto* sub = app.add_subcommand(mode, about.at(mode));
    sub->add_option("--config", config_path, "key = value config file")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "master random seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    gm::cli::RunConfig run;
    run.mode = app.get_subcommands().front()->get_name();
    run.values = gm::cli::Config::load(config_path);
    run.out_dir = out_dir;
    run.jobs = jobs;
    run.seed = seed;
    gm::cli::run_mode(run);
    return kOk;
  } catch (const gm::cli::ConfigError& e) {
    spdlog::error("config error: {}", e.what());
    return kConfigError;
  } catch (const gm::DomainError& e) {
    spdlog::error("invalid input: {}", e.what());
    return kConfigError;
  } catch (const gm::cli::NumericalFailure& e) {
    spdlog::error("numerical tolerance failure: {}", e.what());
    return kNumericalError;
  } catch (const gm::TruncationError& e) {
    spdlog::error("truncation failure: {}", e.what());
    return kNumericalError;
  } catch (const gm::RefinementError& e) {
    spdlog::error("quadrature refinement failure: {}", e.what());
    return kNumericalError;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
}
