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

#include "entlur/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "entlur/errors.hpp"
#include "entlur/states.hpp"

namespace entlur {

namespace {

double clamp_variance(double v, const Tolerances &tol) {
    if (v >= 0.0)
        return v;
    if (v >= -tol.variance_clamp)
        return 0.0;
    std::ostringstream msg;
    msg << "variance evaluated to " << v << ", below the rounding threshold -"
        << tol.variance_clamp;
    throw InternalConsistency(msg.str());
}

void require_hermitian(const ComplexMatrix &a, const Tolerances &tol) {
    if (!a.is_hermitian(tol.hermitian))
        throw NotHermitian("variance: operator is not Hermitian");
}

void fix_phase(ComplexVector &psi) {
    std::size_t big = 0;
    for (std::size_t k = 1; k < psi.size(); ++k)
        if (std::abs(psi[k]) > std::abs(psi[big]) * (1.0 + 1e-12))
            big = k;
    const double mag = std::abs(psi[big]);
    if (mag == 0.0)
        return;
    const Complex phase = std::conj(psi[big]) / mag;
    for (auto &z : psi)
        z *= phase;
    psi[big] = Complex(psi[big].real(), 0.0);
}

void normalize(ComplexVector &psi) {
    const double n = norm(psi);
    for (auto &z : psi)
        z /= n;
}

double grad_norm(const ComplexVector &g) { return norm(g); }

} // namespace

double variance(const DensityMatrix &rho, const ComplexMatrix &a, const Tolerances &tol) {
    require_hermitian(a, tol);
    const double mean = expectation(rho, a, tol);
    const double second = expectation(rho, a * a, tol);
    return clamp_variance(second - mean * mean, tol);
}

double variance(const PureState &psi, const ComplexMatrix &a, const Tolerances &tol) {
    require_hermitian(a, tol);
    const double mean = expectation(psi, a, tol);
    const double second = expectation(psi, a * a, tol);
    return clamp_variance(second - mean * mean, tol);
}

double sum_uncertainty(const DensityMatrix &rho, const ObservableSet &obs, const Tolerances &tol) {
    if (obs.dim() != rho.dim())
        throw DimMismatch("sum_uncertainty: observable set '" + obs.label() +
                          "' does not match the state dimension");
    double total = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double mean = expectation(rho, obs[i], tol);
        const double second = expectation(rho, obs.squared(i), tol);
        total += clamp_variance(second - mean * mean, tol);
    }
    return total;
}

double sum_uncertainty(const PureState &psi, const ObservableSet &obs, const Tolerances &tol) {
    if (obs.dim() != psi.dim())
        throw DimMismatch("sum_uncertainty: observable set '" + obs.label() +
                          "' does not match the state dimension");
    double total = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double mean = expectation(psi, obs[i], tol);
        const double second = expectation(psi, obs.squared(i), tol);
        total += clamp_variance(second - mean * mean, tol);
    }
    return total;
}

BoundKind BoundKind::parse(const std::string &name, double l) {
    if (name == "spin3")
        return spin3(Spin::from_value(l));
    if (name == "pauli3")
        return pauli3();
    if (name == "pauli2")
        return pauli2();
    if (name == "spin1_xy")
        return spin1_xy();
    throw InvalidArgument("unknown bound kind '" + name +
                          "' (expected spin3, pauli3, pauli2 or spin1_xy)");
}

std::string BoundKind::name() const {
    switch (family_) {
    case Family::Spin3: {
        std::ostringstream s;
        s << "spin3(l=" << spin_.value() << ")";
        return s.str();
    }
    case Family::Pauli3: return "pauli3";
    case Family::Pauli2: return "pauli2";
    case Family::Spin1XY: return "spin1_xy";
    }
    return "?";
}

ObservableSet BoundKind::observables() const {
    switch (family_) {
    case Family::Spin3: {
        SpinMatrices s = spin_matrices(spin_);
        return ObservableSet(name(), {s.x, s.y, s.z}, {"x", "y", "z"});
    }
    case Family::Pauli3: {
        SpinMatrices s = pauli_matrices();
        return ObservableSet(name(), {s.x, s.y, s.z}, {"x", "y", "z"});
    }
    case Family::Pauli2: {
        SpinMatrices s = pauli_matrices();
        return ObservableSet(name(), {s.x, s.y}, {"x", "y"});
    }
    case Family::Spin1XY: {
        SpinMatrices s = spin_matrices(spin_);
        return ObservableSet(name(), {s.x, s.y}, {"x", "y"});
    }
    }
    throw InvalidArgument("unknown bound family");
}

UncertaintyBound analytic_bound(const BoundKind &kind) {
    UncertaintyBound b;
    b.provenance = AnalyticProvenance{};
    b.observable_set_label = kind.name();
    switch (kind.family()) {
    case BoundKind::Family::Spin3: b.value = kind.spin().value(); break;
    case BoundKind::Family::Pauli3: b.value = 2.0; break;
    case BoundKind::Family::Pauli2: b.value = 1.0; break;
    case BoundKind::Family::Spin1XY: b.value = 7.0 / 16.0; break;
    }
    return b;
}

double sum_uncertainty_objective(const ObservableSet &obs, std::span<const Complex> psi) {
    if (psi.size() != obs.dim())
        throw DimMismatch("objective: state and observable dimensions differ");
    ComplexVector unit(psi.begin(), psi.end());
    normalize(unit);
    // ||(A - <A>) psi||^2 keeps full relative precision near zero variance.
    double total = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        ComplexVector v = obs[i] * unit;
        const double mean = inner(unit, v).real();
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] -= mean * unit[k];
        total += std::pow(norm(v), 2);
    }
    return total;
}

// For h = <psi|M|psi>/<psi|psi> at unit psi, dh/dRe + i dh/dIm = 2 (M psi - h psi).
// Chain rule on <A^2> - <A>^2 gives 2 sum_i [(A_i - <A_i>) v_i - var_i psi]
// with v_i = (A_i - <A_i>) psi.
ComplexVector sum_uncertainty_gradient(const ObservableSet &obs, std::span<const Complex> psi) {
    if (psi.size() != obs.dim())
        throw DimMismatch("gradient: state and observable dimensions differ");
    const std::size_t n = psi.size();
    ComplexVector g(n);
    for (std::size_t i = 0; i < obs.size(); ++i) {
        ComplexVector v = obs[i] * psi;
        const double mean = inner(psi, v).real();
        for (std::size_t k = 0; k < n; ++k)
            v[k] -= mean * psi[k];
        const double var = std::pow(norm(v), 2);
        ComplexVector w = obs[i] * v;
        for (std::size_t k = 0; k < n; ++k)
            g[k] += 2.0 * (w[k] - mean * v[k] - var * psi[k]);
    }
    return g;
}

LocalMinimum descend(const ObservableSet &obs, ComplexVector start,
                     const OptimizerOptions &options) {
    constexpr double kArmijo = 1e-4;
    constexpr double kMinStep = 1e-20;
    constexpr double kMaxStep = 1e3;

    ComplexVector psi = std::move(start);
    normalize(psi);
    double f = sum_uncertainty_objective(obs, psi);
    ComplexVector g = sum_uncertainty_gradient(obs, psi);
    double gn = grad_norm(g);
    double step = 1.0;

    auto move = [&](double s) {
        ComplexVector trial(psi.size());
        for (std::size_t k = 0; k < psi.size(); ++k)
            trial[k] = psi[k] - s * g[k];
        normalize(trial);
        return trial;
    };

    LocalMinimum out;
    std::size_t it = 0;
    for (; it < options.max_iterations && gn > options.tolerance; ++it) {
        const double g2 = gn * gn;
        // Decreases below this are lost in the rounding of f, whose residual
        // vectors carry absolute errors near machine epsilon.
        const double resolution = 1e-14 * (std::abs(f) + std::sqrt(std::abs(f))) + 1e-300;
        bool accepted = false;
        ComplexVector trial;
        ComplexVector g_trial;
        double f_trial = f;
        step = std::min(step * 2.0, kMaxStep);
        while (step >= kMinStep) {
            trial = move(step);
            f_trial = sum_uncertainty_objective(obs, trial);
            if (f_trial <= f - kArmijo * step * g2) {
                accepted = true;
                // Armijo alone admits steps that overshoot the valley and
                // bounce across it; keep halving while f still improves.
                while (step / 2.0 >= kMinStep) {
                    ComplexVector shorter = move(step / 2.0);
                    const double f_shorter = sum_uncertainty_objective(obs, shorter);
                    if (!(f_shorter < f_trial))
                        break;
                    step /= 2.0;
                    trial = std::move(shorter);
                    f_trial = f_shorter;
                }
                break;
            }
            if (kArmijo * step * g2 < resolution && f_trial <= f + resolution) {
                // Below resolution the gradient norm decides.
                g_trial = sum_uncertainty_gradient(obs, trial);
                if (grad_norm(g_trial) < gn) {
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if (!accepted)
            break;
        psi = std::move(trial);
        f = f_trial;
        g = g_trial.empty() ? sum_uncertainty_gradient(obs, psi) : std::move(g_trial);
        gn = grad_norm(g);
    }

    fix_phase(psi);
    out.value = sum_uncertainty_objective(obs, psi);
    out.gradient_norm = gn;
    out.iterations = it;
    out.converged = gn <= options.tolerance;
    out.state = std::move(psi);
    return out;
}

std::mt19937_64 restart_stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

UncertaintyBound minimize_sum_uncertainty(const ObservableSet &obs,
                                          const OptimizerOptions &options) {
    if (options.restarts == 0)
        throw InvalidArgument("minimize_sum_uncertainty: restarts must be >= 1");

    std::vector<LocalMinimum> results(options.restarts);
    auto run = [&](std::size_t r) {
        std::mt19937_64 rng = restart_stream(options.seed, r);
        ComplexVector start = random_pure(obs.dim(), rng).amplitudes();
        results[r] = descend(obs, std::move(start), options);
    };

    std::size_t workers = options.threads == 0 ? std::thread::hardware_concurrency()
                                               : options.threads;
    workers = std::clamp<std::size_t>(workers, 1, options.restarts);
    if (workers == 1) {
        for (std::size_t r = 0; r < options.restarts; ++r)
            run(r);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t r = w; r < options.restarts; r += workers)
                    run(r);
            });
        for (auto &t : pool)
            t.join();
    }

    // Argmin over converged restarts, lowest index wins ties.
    const LocalMinimum *best = nullptr;
    std::size_t converged = 0;
    for (const auto &res : results) {
        if (!res.converged)
            continue;
        ++converged;
        if (best == nullptr || res.value < best->value)
            best = &res;
    }
    if (best == nullptr) {
        std::ostringstream msg;
        msg << "none of " << options.restarts << " restarts for '" << obs.label()
            << "' reached gradient tolerance " << options.tolerance << " within "
            << options.max_iterations << " iterations";
        throw NonConvergence(msg.str());
    }

    UncertaintyBound bound;
    bound.value = std::max(0.0, best->value);
    bound.observable_set_label = obs.label();
    NumericProvenance prov;
    prov.restarts = options.restarts;
    prov.converged_restarts = converged;
    prov.tolerance = options.tolerance;
    prov.best_state = best->state;
    prov.gradient_norm = best->gradient_norm;
    bound.provenance = std::move(prov);
    return bound;
}

} // namespace entlur
