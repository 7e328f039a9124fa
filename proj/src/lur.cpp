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

#include "entlur/lur.hpp"

#include <cmath>
#include <sstream>

#include "entlur/errors.hpp"
#include "entlur/format.hpp"
#include "entlur/measures.hpp"
#include "entlur/states.hpp"

namespace entlur {

ComplexMatrix joint_operator(const ComplexMatrix &a, const ComplexMatrix &b, const Tolerances &tol) {
    if (!a.is_hermitian(tol.hermitian) || !b.is_hermitian(tol.hermitian))
        throw NotHermitian("joint_operator: both local operators must be Hermitian");
    return tensor_product(a, ComplexMatrix::identity(b.rows())) +
           tensor_product(ComplexMatrix::identity(a.rows()), b);
}

namespace {

std::vector<ComplexMatrix> joints_of(const ObservableSet &a, const ObservableSet &b) {
    if (a.size() != b.size()) {
        std::ostringstream msg;
        msg << "LUR needs one B_i per A_i, got " << a.size() << " and " << b.size();
        throw InvalidArgument(msg.str());
    }
    std::vector<ComplexMatrix> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(joint_operator(a[i], b[i]));
    return out;
}

} // namespace

LURSpec::LURSpec(std::string label, ObservableSet obs_a, ObservableSet obs_b,
                 UncertaintyBound bound_a, UncertaintyBound bound_b)
    : label_(std::move(label)), obs_a_(std::move(obs_a)), obs_b_(std::move(obs_b)),
      bound_a_(std::move(bound_a)), bound_b_(std::move(bound_b)),
      joints_(joints_of(obs_a_, obs_b_)), joint_set_(label_, joints_, obs_a_.names()) {
    if (!(bound() > 0.0)) {
        std::ostringstream msg;
        msg << "LUR '" << label_ << "' has non-positive bound " << bound();
        throw InvalidArgument(msg.str());
    }
}

LURSpec builtin_spec(const BoundKind &kind) {
    ObservableSet obs = kind.observables();
    const UncertaintyBound u = analytic_bound(kind);
    std::string label = kind.name();
    if (kind.family() == BoundKind::Family::Spin3) {
        std::ostringstream s;
        s << "spin3_lur(l=" << kind.spin().value() << ")";
        label = s.str();
    } else {
        label += "_lur";
    }
    // The singlet is annihilated by L_i(A) + L_i(B), so B uses the same operators.
    return LURSpec(label, obs, obs, u, u);
}

LURSpec builtin_spec(const std::string &name, double l) {
    std::string family = name;
    const std::string suffix = "_lur";
    if (family.size() > suffix.size() &&
        family.compare(family.size() - suffix.size(), suffix.size(), suffix) == 0)
        family.resize(family.size() - suffix.size());
    return builtin_spec(BoundKind::parse(family, l));
}

LURSpec max_entangled_spec(const ObservableSet &obs_a, const OptimizerOptions &options) {
    std::vector<ComplexMatrix> partners;
    for (const auto &a : obs_a.operators())
        partners.push_back(partner_operator(a));
    ObservableSet obs_b(obs_a.label() + "_partner", std::move(partners), obs_a.names());
    UncertaintyBound ua = minimize_sum_uncertainty(obs_a, options);
    OptimizerOptions opts_b = options;
    opts_b.seed = options.seed + 1;
    UncertaintyBound ub = minimize_sum_uncertainty(obs_b, opts_b);
    return LURSpec("max_entangled_lur(" + obs_a.label() + ")", obs_a, std::move(obs_b),
                   std::move(ua), std::move(ub));
}

const char *to_string(Verdict v) {
    return v == Verdict::Entangled ? "Entangled" : "Inconclusive";
}

LURReport make_report(const LURSpec &spec, RealVector per_setting_variances,
                      const Tolerances &tol) {
    if (per_setting_variances.size() != spec.settings())
        throw InvalidArgument("make_report: one variance per setting required");
    LURReport r;
    r.spec_label = spec.label();
    for (std::size_t i = 0; i < spec.settings(); ++i)
        r.setting_labels.push_back(spec.setting_label(i));
    r.per_setting_variances = std::move(per_setting_variances);
    r.total = 0.0;
    for (double v : r.per_setting_variances)
        r.total += v;
    r.bound = spec.bound();
    r.c_lur = 1.0 - r.total / r.bound;
    r.margin = r.total - r.bound;
    r.verdict = r.total < r.bound - tol.judge ? Verdict::Entangled : Verdict::Inconclusive;
    return r;
}

LURReport evaluate(const DensityMatrix &rho, const LURSpec &spec, const Tolerances &tol) {
    if (rho.dim() != spec.dim_a() * spec.dim_b()) {
        std::ostringstream msg;
        msg << "state dimension " << rho.dim() << " does not match " << spec.label() << " ("
            << spec.dim_a() << "x" << spec.dim_b() << ")";
        throw DimMismatch(msg.str());
    }
    const ObservableSet &joint = spec.joint_set();
    RealVector vars;
    for (std::size_t i = 0; i < joint.size(); ++i) {
        const double mean = expectation(rho, joint[i], tol);
        const double second = expectation(rho, joint.squared(i), tol);
        double v = second - mean * mean;
        if (v < 0.0) {
            if (v < -tol.variance_clamp)
                throw InternalConsistency("negative joint variance beyond rounding");
            v = 0.0;
        }
        vars.push_back(v);
    }
    return make_report(spec, std::move(vars), tol);
}

ProductMinimum min_over_product_states(const LURSpec &spec, const OptimizerOptions &options) {
    if (options.restarts == 0)
        throw InvalidArgument("min_over_product_states: restarts must be >= 1");
    constexpr std::size_t kMaxRounds = 50;

    auto product_total = [&](const ComplexVector &alpha, const ComplexVector &beta) {
        const PureState ab = tensor_product(PureState::normalized(alpha),
                                            PureState::normalized(beta));
        return evaluate(DensityMatrix(ab), spec).total;
    };

    std::optional<ProductMinimum> best;
    for (std::size_t r = 0; r < options.restarts; ++r) {
        std::mt19937_64 rng = restart_stream(options.seed, r);
        ComplexVector alpha = random_pure(spec.dim_a(), rng).amplitudes();
        ComplexVector beta = random_pure(spec.dim_b(), rng).amplitudes();
        double total = product_total(alpha, beta);
        bool converged = false;
        std::size_t round = 0;
        // On product states each joint variance splits into delta A_i^2 + delta B_i^2,
        // so with one factor held the other side's conditional objective is its own
        // sum uncertainty.
        while (round < kMaxRounds && !converged) {
            ++round;
            const LocalMinimum a_step = descend(spec.obs_a(), alpha, options);
            alpha = a_step.state;
            const LocalMinimum b_step = descend(spec.obs_b(), beta, options);
            beta = b_step.state;
            const double next = product_total(alpha, beta);
            converged = a_step.converged && b_step.converged &&
                        std::abs(total - next) <= options.tolerance * (1.0 + std::abs(next));
            total = next;
        }
        if (!converged)
            continue;
        if (!best || total < best->value)
            best = ProductMinimum{total, alpha, beta, round};
    }
    if (!best)
        throw NonConvergence("min_over_product_states: no restart converged for " + spec.label());
    return *best;
}

std::vector<WernerRow> werner_sweep(const RealVector &grid) {
    const LURSpec p3 = builtin_spec(BoundKind::pauli3());
    const LURSpec p2 = builtin_spec(BoundKind::pauli2());
    std::vector<WernerRow> rows;
    rows.reserve(grid.size());
    for (double p : grid) {
        const DensityMatrix rho = werner(WernerParams(p));
        rows.push_back(WernerRow{p, evaluate(rho, p3).c_lur, evaluate(rho, p2).c_lur,
                                 concurrence(rho)});
    }
    return rows;
}

std::string state_digest(const DensityMatrix &rho) {
    return fnv1a_hex(state_to_json(rho).dump());
}

nlohmann::ordered_json report_to_json(const LURReport &report) {
    nlohmann::ordered_json doc;
    doc["spec"] = report.spec_label;
    auto settings = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < report.setting_labels.size(); ++i) {
        nlohmann::ordered_json s;
        s["label"] = report.setting_labels[i];
        s["variance"] = round12(report.per_setting_variances[i]);
        settings.push_back(std::move(s));
    }
    doc["per_setting_variances"] = std::move(settings);
    doc["total"] = round12(report.total);
    doc["bound"] = round12(report.bound);
    doc["c_lur"] = round12(report.c_lur);
    doc["margin"] = round12(report.margin);
    doc["verdict"] = to_string(report.verdict);
    if (report.shots)
        doc["shots"] = *report.shots;
    doc["input_digest"] = report.input_digest;
    return doc;
}

std::string report_to_csv(const LURReport &report) {
    std::ostringstream out;
    out << "setting,variance,bound,c_lur,margin,verdict\n";
    for (std::size_t i = 0; i < report.setting_labels.size(); ++i)
        out << report.setting_labels[i] << ',' << format12(report.per_setting_variances[i])
            << ",,,,\n";
    out << "total," << format12(report.total) << ',' << format12(report.bound) << ','
        << format12(report.c_lur) << ',' << format12(report.margin) << ','
        << to_string(report.verdict) << '\n';
    return out.str();
}

std::string report_to_text(const LURReport &report) {
    std::ostringstream out;
    out << "LUR " << report.spec_label << '\n';
    for (std::size_t i = 0; i < report.setting_labels.size(); ++i)
        out << "  delta(A+B)^2 [" << report.setting_labels[i]
            << "] = " << format12(report.per_setting_variances[i]) << '\n';
    out << "  total   = " << format12(report.total) << '\n'
        << "  bound   = " << format12(report.bound) << '\n'
        << "  C_LUR   = " << format12(report.c_lur) << '\n'
        << "  margin  = " << format12(report.margin) << '\n';
    if (report.shots)
        out << "  shots   = " << *report.shots << '\n';
    out << "  verdict = " << to_string(report.verdict) << '\n';
    return out.str();
}

} // namespace entlur
