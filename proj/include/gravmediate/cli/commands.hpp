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

// Command implementations. Each mode reads its keys from the run config,
// writes its files into out_dir and returns the JSON summary it wrote.

#include <string>
#include <vector>

#include "gravmediate/cli/config.hpp"
#include "gravmediate/cli/output.hpp"
#include "gravmediate/entanglement.hpp"

namespace gm::cli {

const std::vector<std::string>& mode_names();

Json run_mode(const RunConfig& run);

Json cmd_simulate(const RunConfig& run);
Json cmd_sweep(const RunConfig& run);
Json cmd_design(const RunConfig& run);
Json cmd_casimir(const RunConfig& run);
Json cmd_enhance(const RunConfig& run);
Json cmd_noise_dd(const RunConfig& run);

/// Cut names accepted by the `cuts` key: ab, ac, c_ab, a_bc.
Bipartition cut_from_name(const std::string& name);

/// timeseries.csv layout for one evolution.
CsvTable timeseries_table(const ModelParams& params, const TimeSeriesResult& r);

}  // namespace gm::cli
