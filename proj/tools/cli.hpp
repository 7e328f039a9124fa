// Copyright 2026 The entlur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "entlur/tolerances.hpp"
#include "entlur/uncertainty.hpp"

namespace entlur::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kEntangled = 0,
    kInconclusive = 1,
    kError = 2,
};

/// Tolerances plus optimizer defaults; `--config file.json` overrides them.
struct Config {
    Tolerances tolerances;
    OptimizerOptions optimizer;
};

/// Applies the keys present in doc, e.g.
///   {"restarts": 64, "tol": 1e-9, "max_iterations": 10000, "seed": 0,
///    "threads": 0, "tolerances": {"judge": 1e-9, ...}}
/// Unknown keys raise SchemaError.
void apply_config(Config &config, const nlohmann::json &doc);

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace entlur::cli
