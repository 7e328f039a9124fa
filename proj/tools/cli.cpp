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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "entlur/errors.hpp"
#include "entlur/format.hpp"
#include "entlur/ingest.hpp"
#include "entlur/lur.hpp"
#include "entlur/measures.hpp"
#include "entlur/states.hpp"
#include "entlur/uncertainty.hpp"

namespace entlur::cli {

namespace {

nlohmann::json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw InvalidArgument("cannot write '" + path + "'");
    file << text;
}

std::string dump(const nlohmann::ordered_json &doc) { return doc.dump(2) + "\n"; }

void set_double(const nlohmann::json &obj, const char *key, double &field) {
    if (!obj.contains(key))
        return;
    if (!obj[key].is_number())
        throw SchemaError(std::string("config: '") + key + "' must be a number");
    field = obj[key].get<double>();
}

template <typename T>
void set_count(const nlohmann::json &obj, const char *key, T &field) {
    if (!obj.contains(key))
        return;
    if (!obj[key].is_number_integer() || obj[key].get<std::int64_t>() < 0)
        throw SchemaError(std::string("config: '") + key + "' must be a nonnegative integer");
    field = obj[key].get<T>();
}

int verdict_code(const LURReport &r) {
    return r.verdict == Verdict::Entangled ? kEntangled : kInconclusive;
}

std::string render_report(const LURReport &r, const std::string &format) {
    if (format == "csv")
        return report_to_csv(r);
    if (format == "pretty")
        return report_to_text(r);
    return dump(report_to_json(r));
}

nlohmann::ordered_json complex_list(const ComplexVector &v) {
    auto arr = nlohmann::ordered_json::array();
    for (const Complex &z : v)
        arr.push_back(nlohmann::ordered_json::array({round12(z.real()), round12(z.imag())}));
    return arr;
}

RealVector sweep_grid(double from, double to, std::size_t steps) {
    if (!(from >= 0.0 && from <= 1.0 && to >= 0.0 && to <= 1.0))
        throw InvalidArgument("werner-sweep: grid must lie in [0, 1]");
    RealVector grid;
    if (steps == 0) {
        grid.push_back(from);
        return grid;
    }
    for (std::size_t k = 0; k <= steps; ++k)
        grid.push_back(from + (to - from) * static_cast<double>(k) / static_cast<double>(steps));
    grid.back() = to;
    return grid;
}

} // namespace

void apply_config(Config &config, const nlohmann::json &doc) {
    if (!doc.is_object())
        throw SchemaError("config: top level must be an object");
    static const char *kTop[] = {"restarts", "tol", "max_iterations", "seed", "threads",
                                 "tolerances"};
    for (const auto &item : doc.items())
        if (std::find_if(std::begin(kTop), std::end(kTop),
                         [&](const char *k) { return item.key() == k; }) == std::end(kTop))
            throw SchemaError("config: unknown key '" + item.key() + "'");

    set_count(doc, "restarts", config.optimizer.restarts);
    set_double(doc, "tol", config.optimizer.tolerance);
    set_count(doc, "max_iterations", config.optimizer.max_iterations);
    set_count(doc, "seed", config.optimizer.seed);
    set_count(doc, "threads", config.optimizer.threads);
    if (!doc.contains("tolerances"))
        return;
    const auto &t = doc["tolerances"];
    if (!t.is_object())
        throw SchemaError("config: 'tolerances' must be an object");
    Tolerances &tol = config.tolerances;
    const std::pair<const char *, double *> fields[] = {
        {"norm", &tol.norm},
        {"hermitian", &tol.hermitian},
        {"trace", &tol.trace},
        {"psd", &tol.psd},
        {"expectation_imag", &tol.expectation_imag},
        {"variance_clamp", &tol.variance_clamp},
        {"judge", &tol.judge},
        {"outcome_match", &tol.outcome_match},
        {"probability_sum", &tol.probability_sum},
        {"mixture_weights", &tol.mixture_weights},
        {"concurrence_clamp", &tol.concurrence_clamp},
    };
    for (const auto &item : t.items()) {
        auto hit = std::find_if(std::begin(fields), std::end(fields),
                                [&](const auto &f) { return item.key() == f.first; });
        if (hit == std::end(fields))
            throw SchemaError("config: unknown tolerance '" + item.key() + "'");
        set_double(t, hit->first, *hit->second);
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement detection with local uncertainty relations", "entlur"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON file overriding tolerances and optimizer defaults");

    // Optimizer flags, shared by bounds.
    std::size_t restarts = 0;
    double opt_tol = 0.0;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    std::string format;
    double spin_l = 1.0;
    std::string spec_name;

    auto *bounds = app.add_subcommand("bounds", "Certify a sum-uncertainty bound numerically");
    std::string bound_kind;
    bounds->add_option("kind", bound_kind, "spin3 | pauli3 | pauli2 | spin1_xy")->required();
    bounds->add_option("--l", spin_l, "spin quantum number for spin3");
    auto *o_restarts = bounds->add_option("--restarts", restarts, "number of random restarts");
    auto *o_tol = bounds->add_option("--tol", opt_tol, "gradient tolerance; also the gap tolerance");
    auto *o_seed = bounds->add_option("--seed", seed, "random seed");
    auto *o_threads = bounds->add_option("--threads", threads, "worker threads (0 = auto)");
    bounds->add_option("--format", format, "json | pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    auto *check_state = app.add_subcommand("check-state", "Evaluate an LUR on a state file");
    std::string state_path;
    check_state->add_option("state", state_path, "state JSON file")->required();
    check_state->add_option("--spec", spec_name, "pauli3 | pauli2 | spin3 | spin1_xy")->required();
    check_state->add_option("--l", spin_l, "spin quantum number for spin3");
    check_state->add_option("--format", format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    auto *check_data = app.add_subcommand("check-data", "Evaluate an LUR on measured statistics");
    std::string data_path;
    check_data->add_option("data", data_path, "dataset JSON file")->required();
    check_data->add_option("--spec", spec_name, "pauli3 | pauli2 | spin3 | spin1_xy")->required();
    check_data->add_option("--l", spin_l, "spin quantum number for spin3");
    check_data->add_option("--format", format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    auto *sweep = app.add_subcommand("werner-sweep", "C_LUR and concurrence across Werner states");
    double from = 0.0;
    double to = 1.0;
    std::size_t steps = 10;
    sweep->add_option("--from", from, "first singlet fraction");
    sweep->add_option("--to", to, "last singlet fraction");
    sweep->add_option("--steps", steps, "number of grid intervals (steps + 1 rows)");
    sweep->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto *sim = app.add_subcommand("simulate", "Produce a measurement dataset from a state");
    std::string sim_state;
    std::uint64_t shots = 0;
    std::string output;
    sim->add_option("state", sim_state, "state JSON file")->required();
    sim->add_option("--spec", spec_name, "pauli3 | pauli2 | spin3 | spin1_xy")->required();
    sim->add_option("--l", spin_l, "spin quantum number for spin3");
    auto *o_shots = sim->add_option("--shots", shots, "multinomial sample size per setting");
    auto *o_exact = sim->add_flag("--exact", "emit exact probabilities");
    o_shots->excludes(o_exact);
    o_exact->excludes(o_shots);
    auto *o_sim_seed = sim->add_option("--seed", seed, "random seed");
    sim->add_option("-o,--output", output, "output file (default stdout)");

    auto *make = app.add_subcommand("state", "Write a reference state file");
    std::string family;
    double p_s = 1.0;
    std::size_t dim = 2;
    make->add_option("family", family, "singlet | werner | noise-model | max-entangled | mixed")
        ->required()
        ->check(CLI::IsMember({"singlet", "werner", "noise-model", "max-entangled", "mixed"}));
    make->add_option("--p", p_s, "singlet fraction for werner / noise-model");
    make->add_option("--l", spin_l, "spin quantum number for singlet");
    make->add_option("--n", dim, "dimension per side for max-entangled, total for mixed");
    make->add_option("-o,--output", output, "output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        if (auto *sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
            sub != nullptr && e.get_exit_code() == 0) {
            out << sub->help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return kError;
    }

    try {
        Config config;
        if (!config_path.empty())
            apply_config(config, read_json_file(config_path));
        const Tolerances &tol = config.tolerances;
        OptimizerOptions opts = config.optimizer;
        if (o_restarts->count())
            opts.restarts = restarts;
        if (o_tol->count())
            opts.tolerance = opt_tol;
        if (o_seed->count() || o_sim_seed->count())
            opts.seed = seed;
        if (o_threads->count())
            opts.threads = threads;

        if (bounds->parsed()) {
            const BoundKind kind = BoundKind::parse(bound_kind, spin_l);
            const UncertaintyBound analytic = analytic_bound(kind);
            UncertaintyBound numeric;
            try {
                numeric = minimize_sum_uncertainty(kind.observables(), opts);
            } catch (const NonConvergence &e) {
                err << "error: " << e.what() << "\n";
                return kError;
            }
            const double gap = numeric.value - analytic.value;
            const NumericProvenance &prov = *numeric.numeric();
            if (format == "pretty") {
                out << "bound    " << kind.name() << '\n'
                    << "analytic " << format12(analytic.value) << '\n'
                    << "numeric  " << format12(numeric.value) << '\n'
                    << "gap      " << format12(gap) << '\n'
                    << "restarts " << prov.converged_restarts << '/' << prov.restarts
                    << " converged\n"
                    << "achiever";
                for (const Complex &z : prov.best_state)
                    out << ' ' << format12(z.real()) << (z.imag() < 0 ? "-" : "+")
                        << format12(std::abs(z.imag())) << 'i';
                out << '\n';
            } else {
                nlohmann::ordered_json doc;
                doc["kind"] = kind.name();
                doc["analytic"] = round12(analytic.value);
                doc["numeric"] = round12(numeric.value);
                doc["gap"] = round12(gap);
                doc["tolerance"] = opts.tolerance;
                doc["restarts"] = prov.restarts;
                doc["converged_restarts"] = prov.converged_restarts;
                doc["seed"] = opts.seed;
                doc["achiever"] = complex_list(prov.best_state);
                out << dump(doc);
            }
            return std::abs(gap) <= opts.tolerance ? 0 : 1;
        }

        if (check_state->parsed()) {
            const LURSpec spec = builtin_spec(spec_name, spin_l);
            const StateFile sf = state_from_json(read_json_file(state_path), tol);
            LURReport report = evaluate(sf.rho, spec, tol);
            report.input_digest = state_digest(sf.rho);
            out << render_report(report, format);
            return verdict_code(report);
        }

        if (check_data->parsed()) {
            const LURSpec spec = builtin_spec(spec_name, spin_l);
            const nlohmann::json doc = read_json_file(data_path);
            const MeasurementDataset ds = parse_dataset(doc, spec, tol);
            LURReport report = evaluate_from_data(ds, spec, tol);
            report.input_digest = fnv1a_hex(dataset_to_json(ds).dump());
            out << render_report(report, format);
            return verdict_code(report);
        }

        if (sweep->parsed()) {
            const std::vector<WernerRow> rows = werner_sweep(sweep_grid(from, to, steps));
            if (format == "json") {
                auto arr = nlohmann::ordered_json::array();
                for (const auto &r : rows) {
                    nlohmann::ordered_json row;
                    row["p_s"] = round12(r.p_s);
                    row["c_lur_pauli3"] = round12(r.c_lur_pauli3);
                    row["c_lur_pauli2"] = round12(r.c_lur_pauli2);
                    row["concurrence"] = round12(r.concurrence);
                    arr.push_back(std::move(row));
                }
                out << dump(arr);
            } else {
                out << "p_s,c_lur_pauli3,c_lur_pauli2,concurrence\n";
                for (const auto &r : rows)
                    out << format12(r.p_s) << ',' << format12(r.c_lur_pauli3) << ','
                        << format12(r.c_lur_pauli2) << ',' << format12(r.concurrence) << '\n';
            }
            return 0;
        }

        if (sim->parsed()) {
            if (!o_shots->count() && !o_exact->count())
                throw InvalidArgument("simulate: pass either --shots N or --exact");
            const LURSpec spec = builtin_spec(spec_name, spin_l);
            const StateFile sf = state_from_json(read_json_file(sim_state), tol);
            std::mt19937_64 rng(opts.seed);
            std::optional<std::uint64_t> n;
            if (o_shots->count())
                n = shots;
            const MeasurementDataset ds = simulate(sf.rho, spec, n, rng, tol);
            write_text(output, dump(dataset_to_json(ds)), out);
            return 0;
        }

        if (make->parsed()) {
            nlohmann::ordered_json doc;
            if (family == "singlet")
                doc = state_to_json(singlet(Spin::from_value(spin_l)));
            else if (family == "werner")
                doc = state_to_json(werner(WernerParams(p_s)));
            else if (family == "noise-model")
                doc = state_to_json(noise_model_state(p_s));
            else if (family == "max-entangled")
                doc = state_to_json(max_entangled(dim));
            else
                doc = state_to_json(DensityMatrix(ComplexMatrix::identity(dim) *
                                                  Complex(1.0 / static_cast<double>(dim))));
            // Full precision so the file validates at the default norm tolerance.
            write_text(output, doc.dump(2, ' ', false) + "\n", out);
            return 0;
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kError;
    } catch (const nlohmann::json::exception &e) {
        err << "error: SchemaError: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

} // namespace entlur::cli
