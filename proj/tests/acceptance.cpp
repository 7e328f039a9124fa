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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "entlur/ingest.hpp"
#include "entlur/lur.hpp"
#include "entlur/measures.hpp"
#include "entlur/states.hpp"
#include "entlur/uncertainty.hpp"

using namespace entlur;

namespace {

struct Check {
    bool pass;
    std::string detail;
};

std::string fmt(const char *pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

std::vector<BoundKind> builtin_kinds() {
    return {BoundKind::pauli3(), BoundKind::pauli2(), BoundKind::spin3(Spin::from_twice(2)),
            BoundKind::spin1_xy()};
}

Check check_bound_certification() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<BoundKind> kinds{BoundKind::pauli3(), BoundKind::pauli2(), BoundKind::spin1_xy()};
    for (int twice = 1; twice <= 4; ++twice)
        kinds.push_back(BoundKind::spin3(Spin::from_twice(twice)));
    double worst = 0.0;
    for (const auto &kind : kinds) {
        const double numeric = minimize_sum_uncertainty(kind.observables()).value;
        worst = std::max(worst, std::abs(numeric - analytic_bound(kind).value));
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst <= 1e-6 && seconds < 60.0,
            fmt("max |numeric - analytic| = %.3g over 7 kinds, %.2f s", worst, seconds)};
}

Check check_xy_minimizer_state() {
    const double side = std::sqrt(5.0) / 4.0;
    const double phi = 0.37;
    const PureState psi(ComplexVector{side * std::exp(-kI * phi), Complex(std::sqrt(6.0) / 4.0),
                                      side * std::exp(kI * phi)});
    const SpinMatrices s = spin_matrices(Spin::from_twice(2));
    const double xy = sum_uncertainty(psi, BoundKind::spin1_xy().observables());
    const double z = variance(psi, s.z);
    const double all = sum_uncertainty(psi, BoundKind::spin3(Spin::from_twice(2)).observables());
    const double excess = all - 1.0;
    const bool ok = std::abs(xy - 7.0 / 16.0) <= 1e-12 && std::abs(z - 5.0 / 8.0) <= 1e-12 &&
                    std::abs(all - 17.0 / 16.0) <= 1e-12 && std::abs(excess - 1.0 / 16.0) <= 1e-12;
    return {ok, fmt("xy = %.15g, z = %.15g, xyz = %.15g", xy, z, all)};
}

Check check_separable_safety() {
    std::mt19937_64 rng(3);
    std::size_t entangled = 0;
    double worst_margin = 1e300;
    for (const auto &kind : builtin_kinds()) {
        const LURSpec spec = builtin_spec(kind);
        std::uniform_int_distribution<std::size_t> terms(1, 10);
        for (int k = 0; k < 10000; ++k) {
            const DensityMatrix rho =
                random_separable_mixture(spec.dim_a(), spec.dim_b(), terms(rng), rng);
            const LURReport r = evaluate(rho, spec);
            entangled += r.verdict == Verdict::Entangled;
            worst_margin = std::min(worst_margin, r.margin);
        }
    }
    return {entangled == 0, fmt("%.0f Entangled verdicts in 4 x 10000, smallest margin %.6g",
                                static_cast<double>(entangled), worst_margin)};
}

Check check_product_tightness() {
    double worst = 0.0;
    std::string values;
    for (const auto &kind : builtin_kinds()) {
        const LURSpec spec = builtin_spec(kind);
        const ProductMinimum m = min_over_product_states(spec);
        worst = std::max(worst, std::abs(m.value - spec.bound()));
        values += fmt("%.10g ", m.value);
    }
    return {worst <= 1e-6, "minima " + values + fmt("max deviation %.3g", worst)};
}

Check check_maximal_violation() {
    std::mt19937_64 rng(5);
    OptimizerOptions opts;
    opts.restarts = 16;
    double worst = 0.0;
    std::size_t entangled = 0;
    for (int k = 0; k < 100; ++k) {
        const ObservableSet obs("random", {random_hermitian(3, rng), random_hermitian(3, rng),
                                           random_hermitian(3, rng)});
        opts.seed = static_cast<std::uint64_t>(k);
        const LURSpec spec = max_entangled_spec(obs, opts);
        const LURReport r = evaluate(DensityMatrix(max_entangled(3)), spec);
        worst = std::max(worst, r.total);
        entangled += r.verdict == Verdict::Entangled;
    }
    return {worst <= 1e-10, fmt("max total %.3g over 100 sets, %.0f Entangled", worst,
                                static_cast<double>(entangled))};
}

Check check_noise_model() {
    const LURSpec xy = builtin_spec(BoundKind::spin1_xy());
    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double p = k / 20.0;
        const double c = evaluate(noise_model_state(p), xy).c_lur;
        worst = std::max(worst, std::abs(c - (32.0 * p - 11.0) / 21.0));
    }
    const double c69 = evaluate(noise_model_state(0.69), xy).c_lur;
    const bool ok = worst <= 1e-10 && std::abs(c69 - 0.52762) <= 5e-6 &&
                    std::abs(c69 - 0.53) <= 0.005;
    return {ok, fmt("grid deviation %.3g, C_LUR(0.69) = %.12g", worst, c69)};
}

Check check_werner_concurrence() {
    const LURSpec p3 = builtin_spec(BoundKind::pauli3());
    const LURSpec p2 = builtin_spec(BoundKind::pauli2());
    double worst = 0.0;
    bool ordered = true;
    for (int k = 0; k <= 200; ++k) {
        const double p = 1.0 / 3.0 + (2.0 / 3.0) * k / 200.0;
        const DensityMatrix rho = werner(WernerParams(p));
        const double c3 = evaluate(rho, p3).c_lur;
        worst = std::max(worst, std::abs(c3 - concurrence(rho)));
        if (k < 200 && !(evaluate(rho, p2).c_lur < c3))
            ordered = false;
    }
    return {worst <= 1e-10 && ordered,
            fmt("max |C_LUR - concurrence| = %.3g on 201 points, pauli2 below pauli3: ", worst) +
                (ordered ? "yes" : "no")};
}

Check check_concavity() {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::size_t> dim(2, 6);
    std::uniform_int_distribution<std::size_t> count(2, 6);
    double worst = 1e300;
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = dim(rng);
        const RealVector w = random_simplex_weights(count(rng), rng);
        std::vector<MixtureTerm> terms;
        for (double x : w)
            terms.push_back(MixtureTerm{x, random_density(n, 1 + k % n, rng)});
        const ComplexMatrix s = random_hermitian(n, rng);
        double averaged = 0.0;
        for (const auto &t : terms)
            averaged += t.weight * variance(t.state, s);
        worst = std::min(worst, variance(mix(terms), s) - averaged);
    }
    return {worst >= -1e-10, fmt("min excess of mixture variance %.3g over 1000 pairs", worst)};
}

Check check_round_trip() {
    std::mt19937_64 rng(9);
    double worst = 0.0;
    for (const auto &kind : builtin_kinds()) {
        const LURSpec spec = builtin_spec(kind);
        const std::size_t n = spec.dim_a() * spec.dim_b();
        std::uniform_int_distribution<std::size_t> rank(1, n);
        for (int k = 0; k < 100; ++k) {
            const DensityMatrix rho = random_density(n, rank(rng), rng);
            const MeasurementDataset ds = simulate(rho, spec, std::nullopt, rng);
            worst = std::max(worst, std::abs(evaluate_from_data(ds, spec).total -
                                             evaluate(rho, spec).total));
        }
    }
    const LURSpec xy = builtin_spec(BoundKind::spin1_xy());
    const std::size_t outcomes =
        simulate(noise_model_state(0.69), xy, std::nullopt, rng).outcome_count();
    return {worst <= 1e-10 && outcomes == 18,
            fmt("max deviation %.3g over 400 states, spin1_xy dataset has %.0f probabilities",
                worst, static_cast<double>(outcomes))};
}

Check check_gradient_check() {
    std::mt19937_64 rng(10);
    std::normal_distribution<double> gauss;
    std::uniform_int_distribution<std::size_t> dim(2, 6);
    std::uniform_int_distribution<std::size_t> count(1, 4);
    const double h = 1e-5;
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = dim(rng);
        std::vector<ComplexMatrix> ops;
        for (std::size_t i = count(rng); i > 0; --i)
            ops.push_back(random_hermitian(n, rng));
        const ObservableSet obs("random", ops);
        const PureState psi = random_pure(n, rng);
        const ComplexVector g = sum_uncertainty_gradient(obs, psi.amplitudes());
        // Each real coordinate separately.
        for (std::size_t c = 0; c < 2 * n; ++c) {
            ComplexVector plus = psi.amplitudes(), minus = psi.amplitudes();
            const Complex e = c < n ? Complex(h) : Complex(0.0, h);
            plus[c % n] += e;
            minus[c % n] -= e;
            const double fd = (sum_uncertainty_objective(obs, plus) -
                               sum_uncertainty_objective(obs, minus)) / (2.0 * h);
            const double exact = c < n ? g[c].real() : g[c - n].imag();
            worst = std::max(worst, std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
        }
    }
    return {worst <= 1e-6, fmt("max relative deviation %.3g over 100 instances", worst)};
}

} // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Check()>>> criteria{
        {"bound certification", check_bound_certification},
        {"xy minimizer state", check_xy_minimizer_state},
        {"separable safety", check_separable_safety},
        {"product-state tightness", check_product_tightness},
        {"maximal violation", check_maximal_violation},
        {"noise model", check_noise_model},
        {"werner vs concurrence", check_werner_concurrence},
        {"concavity", check_concavity},
        {"simulate round trip", check_round_trip},
        {"gradient check", check_gradient_check},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %2zu %-24s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
