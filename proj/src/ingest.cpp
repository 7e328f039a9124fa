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

#include "entlur/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "entlur/errors.hpp"
#include "entlur/format.hpp"

namespace entlur {

double SettingRecord::total_weight() const {
    double total = 0.0;
    for (const auto &o : outcomes)
        total += o.weight;
    return total;
}

const SettingRecord *MeasurementDataset::find(const std::string &label) const {
    for (const auto &s : settings)
        if (s.label == label)
            return &s;
    return nullptr;
}

std::optional<std::uint64_t> MeasurementDataset::total_shots() const {
    if (mode != DataMode::Counts)
        return std::nullopt;
    double total = 0.0;
    for (const auto &s : settings)
        total += s.total_weight();
    return static_cast<std::uint64_t>(std::llround(total));
}

MeasurementDataset MeasurementDataset::normalized() const {
    MeasurementDataset out = *this;
    out.mode = DataMode::Probabilities;
    for (auto &s : out.settings) {
        const double total = s.total_weight();
        for (auto &o : s.outcomes)
            o.weight /= total;
    }
    return out;
}

std::size_t MeasurementDataset::outcome_count() const {
    std::size_t n = 0;
    for (const auto &s : settings)
        n += s.outcomes.size();
    return n;
}

namespace {

double number_field(const nlohmann::json &obj, const char *key, const std::string &where) {
    if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number())
        throw SchemaError(where + ": field '" + key + "' must be a number");
    const double v = obj[key].get<double>();
    if (!std::isfinite(v))
        throw SchemaError(where + ": field '" + key + "' must be finite");
    return v;
}

// Eigenvalues that sit within 1e-11 of a 1e-10 grid point are written as the
// grid value, so labels like 0.9999999999999998 come out as 1.
double snap(double x) {
    const double r = std::round(x * 1e10) / 1e10;
    return std::abs(x - r) < 1e-11 ? (r == 0.0 ? 0.0 : r) : x;
}

} // namespace

MeasurementDataset parse_dataset(const nlohmann::json &doc, const Tolerances &tol) {
    if (!doc.is_object())
        throw SchemaError("dataset: top level must be an object");
    for (const char *key : {"dims", "mode", "settings"})
        if (!doc.contains(key))
            throw SchemaError(std::string("dataset: missing key '") + key + "'");

    MeasurementDataset ds;
    const auto &dims = doc["dims"];
    auto positive_int = [](const nlohmann::json &v) {
        return v.is_number_integer() && v.get<std::int64_t>() > 0;
    };
    if (!dims.is_array() || dims.size() != 2 || !positive_int(dims[0]) || !positive_int(dims[1]))
        throw SchemaError("dataset: 'dims' must be [NA, NB] with positive integers");
    ds.dim_a = dims[0].get<std::size_t>();
    ds.dim_b = dims[1].get<std::size_t>();

    if (!doc["mode"].is_string())
        throw SchemaError("dataset: 'mode' must be a string");
    const auto mode = doc["mode"].get<std::string>();
    if (mode == "counts")
        ds.mode = DataMode::Counts;
    else if (mode == "probabilities")
        ds.mode = DataMode::Probabilities;
    else
        throw SchemaError("dataset: 'mode' must be \"counts\" or \"probabilities\", got \"" +
                          mode + "\"");

    const auto &settings = doc["settings"];
    if (!settings.is_array())
        throw SchemaError("dataset: 'settings' must be an array");
    std::set<std::string> seen;
    for (std::size_t si = 0; si < settings.size(); ++si) {
        const auto &s = settings[si];
        const std::string where = "dataset setting " + std::to_string(si);
        if (!s.is_object() || !s.contains("label") || !s["label"].is_string())
            throw SchemaError(where + ": 'label' must be a string");
        SettingRecord rec;
        rec.label = s["label"].get<std::string>();
        if (!seen.insert(rec.label).second)
            throw SchemaError("dataset: setting '" + rec.label + "' listed twice");
        if (!s.contains("outcomes") || !s["outcomes"].is_array())
            throw SchemaError(where + ": 'outcomes' must be an array");
        for (const auto &o : s["outcomes"]) {
            Outcome out{number_field(o, "a", where), number_field(o, "b", where),
                        number_field(o, "w", where)};
            for (const auto &prev : rec.outcomes)
                if (std::abs(prev.a - out.a) <= tol.outcome_match &&
                    std::abs(prev.b - out.b) <= tol.outcome_match) {
                    std::ostringstream msg;
                    msg << "dataset: setting '" << rec.label << "' lists pair (" << out.a << ", "
                        << out.b << ") twice";
                    throw SchemaError(msg.str());
                }
            if (out.weight < 0.0)
                throw NormalizationError("dataset: setting '" + rec.label +
                                         "' has a negative weight");
            rec.outcomes.push_back(out);
        }
        const double total = rec.total_weight();
        if (ds.mode == DataMode::Probabilities) {
            if (!(std::abs(total - 1.0) <= tol.probability_sum)) {
                std::ostringstream msg;
                msg.precision(12);
                msg << "dataset: probabilities of setting '" << rec.label << "' sum to " << total
                    << ", not 1 within " << tol.probability_sum;
                throw NormalizationError(msg.str());
            }
        } else if (!(total > 0.0)) {
            throw NormalizationError("dataset: setting '" + rec.label + "' has no counts");
        }
        ds.settings.push_back(std::move(rec));
    }
    return ds;
}

void check_against_spec(const MeasurementDataset &ds, const LURSpec &spec, const Tolerances &tol) {
    if (ds.dim_a != spec.dim_a() || ds.dim_b != spec.dim_b()) {
        std::ostringstream msg;
        msg << "dataset dims [" << ds.dim_a << ", " << ds.dim_b << "] do not match "
            << spec.label() << " [" << spec.dim_a() << ", " << spec.dim_b() << "]";
        throw DimMismatch(msg.str());
    }
    for (std::size_t i = 0; i < spec.settings(); ++i) {
        const SettingRecord *rec = ds.find(spec.setting_label(i));
        if (rec == nullptr)
            continue;
        const Spectrum &sa = spec.obs_a().spectrum(i);
        const Spectrum &sb = spec.obs_b().spectrum(i);
        for (const auto &o : rec->outcomes) {
            if (sa.find(o.a, tol.outcome_match) < 0 || sb.find(o.b, tol.outcome_match) < 0) {
                std::ostringstream msg;
                msg << "setting '" << rec->label << "': outcome (" << o.a << ", " << o.b
                    << ") is not an eigenvalue pair of the " << spec.label() << " operators";
                throw SpectrumMismatch(msg.str());
            }
        }
    }
}

MeasurementDataset parse_dataset(const nlohmann::json &doc, const LURSpec &spec,
                                 const Tolerances &tol) {
    MeasurementDataset ds = parse_dataset(doc, tol);
    check_against_spec(ds, spec, tol);
    return ds;
}

double empirical_variance(const SettingRecord &record) {
    const double total = record.total_weight();
    if (!(total > 0.0))
        throw NormalizationError("setting '" + record.label + "' has zero total weight");
    double mean = 0.0;
    double second = 0.0;
    for (const auto &o : record.outcomes) {
        const double p = o.weight / total;
        const double s = o.a + o.b;
        mean += p * s;
        second += p * s * s;
    }
    return std::max(0.0, second - mean * mean);
}

LURReport evaluate_from_data(const MeasurementDataset &ds, const LURSpec &spec,
                             const Tolerances &tol) {
    check_against_spec(ds, spec, tol);
    RealVector vars;
    for (std::size_t i = 0; i < spec.settings(); ++i) {
        const SettingRecord *rec = ds.find(spec.setting_label(i));
        if (rec == nullptr)
            throw MissingSetting("dataset has no record for setting '" + spec.setting_label(i) +
                                 "' of " + spec.label());
        vars.push_back(empirical_variance(*rec));
    }
    LURReport report = make_report(spec, std::move(vars), tol);
    report.shots = ds.total_shots();
    return report;
}

MeasurementDataset simulate(const DensityMatrix &rho, const LURSpec &spec,
                            std::optional<std::uint64_t> shots, std::mt19937_64 &rng,
                            const Tolerances &tol) {
    if (rho.dim() != spec.dim_a() * spec.dim_b()) {
        std::ostringstream msg;
        msg << "state dimension " << rho.dim() << " does not match " << spec.label();
        throw DimMismatch(msg.str());
    }
    if (shots && *shots == 0)
        throw InvalidArgument("simulate: shot count must be positive");

    MeasurementDataset ds;
    ds.dim_a = spec.dim_a();
    ds.dim_b = spec.dim_b();
    ds.mode = shots ? DataMode::Counts : DataMode::Probabilities;

    for (std::size_t i = 0; i < spec.settings(); ++i) {
        const Spectrum &sa = spec.obs_a().spectrum(i);
        const Spectrum &sb = spec.obs_b().spectrum(i);
        SettingRecord rec;
        rec.label = spec.setting_label(i);
        RealVector probs;
        for (std::size_t ka = 0; ka < sa.distinct_values.size(); ++ka)
            for (std::size_t kb = 0; kb < sb.distinct_values.size(); ++kb) {
                const ComplexMatrix proj = tensor_product(sa.projectors[ka], sb.projectors[kb]);
                double p = expectation(rho, proj, tol);
                if (p < 0.0) {
                    if (p < -tol.psd)
                        throw InternalConsistency("negative outcome probability");
                    p = 0.0;
                }
                probs.push_back(p);
                rec.outcomes.push_back(
                    Outcome{snap(sa.distinct_values[ka]), snap(sb.distinct_values[kb]), p});
            }
        if (shots) {
            // Multinomial draw as a chain of conditional binomials.
            std::uint64_t remaining = *shots;
            double mass_left = 0.0;
            for (double p : probs)
                mass_left += p;
            for (std::size_t k = 0; k < probs.size(); ++k) {
                std::uint64_t n = 0;
                if (k + 1 == probs.size()) {
                    n = remaining;
                } else if (remaining > 0 && mass_left > 0.0) {
                    const double q = std::clamp(probs[k] / mass_left, 0.0, 1.0);
                    std::binomial_distribution<std::uint64_t> binom(remaining, q);
                    n = binom(rng);
                }
                rec.outcomes[k].weight = static_cast<double>(n);
                remaining -= n;
                mass_left -= probs[k];
            }
        }
        ds.settings.push_back(std::move(rec));
    }
    return ds;
}

nlohmann::ordered_json dataset_to_json(const MeasurementDataset &ds) {
    nlohmann::ordered_json doc;
    doc["dims"] = nlohmann::ordered_json::array({ds.dim_a, ds.dim_b});
    doc["mode"] = ds.mode == DataMode::Counts ? "counts" : "probabilities";
    auto settings = nlohmann::ordered_json::array();
    for (const auto &s : ds.settings) {
        nlohmann::ordered_json rec;
        rec["label"] = s.label;
        auto outcomes = nlohmann::ordered_json::array();
        for (const auto &o : s.outcomes) {
            nlohmann::ordered_json item;
            item["a"] = round12(o.a);
            item["b"] = round12(o.b);
            if (ds.mode == DataMode::Counts)
                item["w"] = static_cast<std::uint64_t>(std::llround(o.weight));
            else
                item["w"] = round12(o.weight);
            outcomes.push_back(std::move(item));
        }
        rec["outcomes"] = std::move(outcomes);
        settings.push_back(std::move(rec));
    }
    doc["settings"] = std::move(settings);
    return doc;
}

} // namespace entlur
