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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "entlur/linalg.hpp"
#include "entlur/lur.hpp"

namespace entlur {

enum class DataMode { Counts, Probabilities };

struct Outcome {
    double a;       ///< eigenvalue observed on side A
    double b;       ///< eigenvalue observed on side B
    double weight;  ///< count or probability
};

/// Joint outcome statistics of one measurement setting.
struct SettingRecord {
    std::string label;
    std::vector<Outcome> outcomes;

    double total_weight() const;
};

/// Per-setting joint statistics as recorded by an experiment. File form:
///   {"dims": [NA, NB], "mode": "counts"|"probabilities",
///    "settings": [{"label": str, "outcomes": [{"a": x, "b": y, "w": w}, ...]}, ...]}
/// Outcome pairs not listed have weight zero.
struct MeasurementDataset {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    DataMode mode = DataMode::Probabilities;
    std::vector<SettingRecord> settings;

    const SettingRecord *find(const std::string &label) const;
    /// Sum of all counts in counts mode.
    std::optional<std::uint64_t> total_shots() const;
    /// Copy with every record rescaled to unit total weight; mode becomes
    /// probabilities.
    MeasurementDataset normalized() const;
    /// Number of listed outcome pairs over all settings.
    std::size_t outcome_count() const;
};

/// Schema and normalization checks only. Throws SchemaError (shape, types,
/// duplicate labels or outcome pairs) and NormalizationError (negative
/// weights, probabilities not summing to 1, empty count records).
MeasurementDataset parse_dataset(const nlohmann::json &doc,
                                 const Tolerances &tol = default_tolerances());

/// As above, then check_against_spec.
MeasurementDataset parse_dataset(const nlohmann::json &doc, const LURSpec &spec,
                                 const Tolerances &tol = default_tolerances());

/// DimMismatch if dims differ from the spec; SpectrumMismatch if an outcome
/// value is not an eigenvalue of the setting's local operator within
/// tol.outcome_match. Records without a matching spec setting are ignored.
void check_against_spec(const MeasurementDataset &ds, const LURSpec &spec,
                        const Tolerances &tol = default_tolerances());

/// sum P(a,b)(a+b)^2 - (sum P(a,b)(a+b))^2 with weights normalized.
double empirical_variance(const SettingRecord &record);

/// Report from per-setting empirical variances. Throws MissingSetting when a
/// spec setting has no record.
LURReport evaluate_from_data(const MeasurementDataset &ds, const LURSpec &spec,
                             const Tolerances &tol = default_tolerances());

/// Joint outcome statistics for local projective measurements of every
/// setting. Without shots, P(a,b) = tr(rho (P_a (x) P_b)) over the pooled
/// eigenprojectors, all pairs listed. With shots, one multinomial sample
/// per setting, drawn from rng.
MeasurementDataset simulate(const DensityMatrix &rho, const LURSpec &spec,
                            std::optional<std::uint64_t> shots, std::mt19937_64 &rng,
                            const Tolerances &tol = default_tolerances());

nlohmann::ordered_json dataset_to_json(const MeasurementDataset &ds);

} // namespace entlur
