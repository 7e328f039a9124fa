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
#include <span>
#include <string>
#include <variant>

#include "entlur/linalg.hpp"
#include "entlur/operators.hpp"

namespace entlur {

/// delta A^2 = <A^2> - <A>^2. Results in [-tol.variance_clamp, 0) are clamped
/// to zero; anything more negative throws InternalConsistency.
double variance(const DensityMatrix &rho, const ComplexMatrix &a,
                const Tolerances &tol = default_tolerances());
double variance(const PureState &psi, const ComplexMatrix &a,
                const Tolerances &tol = default_tolerances());

/// sum_i delta A_i^2
double sum_uncertainty(const DensityMatrix &rho, const ObservableSet &obs,
                       const Tolerances &tol = default_tolerances());
double sum_uncertainty(const PureState &psi, const ObservableSet &obs,
                       const Tolerances &tol = default_tolerances());

/// Observable families with a closed-form sum-uncertainty minimum.
class BoundKind {
  public:
    enum class Family { Spin3, Pauli3, Pauli2, Spin1XY };

    static BoundKind spin3(Spin l) { return BoundKind(Family::Spin3, l); }
    static BoundKind pauli3() { return BoundKind(Family::Pauli3, Spin::from_twice(1)); }
    static BoundKind pauli2() { return BoundKind(Family::Pauli2, Spin::from_twice(1)); }
    static BoundKind spin1_xy() { return BoundKind(Family::Spin1XY, Spin::from_twice(2)); }
    /// Accepts spin3 / pauli3 / pauli2 / spin1_xy; l only matters for spin3.
    static BoundKind parse(const std::string &name, double l = 1.0);

    Family family() const noexcept { return family_; }
    Spin spin() const noexcept { return spin_; }
    std::string name() const;

    /// {Lx, Ly, Lz}, {s1, s2, s3}, {s1, s2} or {Lx, Ly} with names x, y, z.
    ObservableSet observables() const;

  private:
    BoundKind(Family f, Spin l) : family_(f), spin_(l) {}
    Family family_;
    Spin spin_;
};

struct AnalyticProvenance {};

struct NumericProvenance {
    std::size_t restarts = 0;
    std::size_t converged_restarts = 0;
    double tolerance = 0.0;
    /// Achieving pure state, global phase fixed.
    ComplexVector best_state;
    double gradient_norm = 0.0;
};

struct UncertaintyBound {
    double value = 0.0;
    std::variant<AnalyticProvenance, NumericProvenance> provenance;
    std::string observable_set_label;

    bool is_analytic() const { return std::holds_alternative<AnalyticProvenance>(provenance); }
    const NumericProvenance *numeric() const { return std::get_if<NumericProvenance>(&provenance); }
};

/// l for spin3(l), 2 for pauli3, 1 for pauli2, 7/16 for spin1_xy.
UncertaintyBound analytic_bound(const BoundKind &kind);

struct OptimizerOptions {
    std::size_t restarts = 64;
    /// Tangent-gradient norm at which a restart counts as converged.
    double tolerance = 1e-9;
    std::size_t max_iterations = 10000;
    std::uint64_t seed = 0;
    /// Worker threads for restarts; 0 picks hardware concurrency.
    std::size_t threads = 0;
};

/// Sum uncertainty of psi / |psi| over the real 2N-dimensional embedding.
double sum_uncertainty_objective(const ObservableSet &obs, std::span<const Complex> psi);

/// Gradient of sum_uncertainty_objective at a unit vector psi, as
/// df/dRe(psi_k) + i df/dIm(psi_k). It is tangent to the sphere and
/// orthogonal to the phase direction i*psi.
ComplexVector sum_uncertainty_gradient(const ObservableSet &obs, std::span<const Complex> psi);

struct LocalMinimum {
    ComplexVector state;
    double value = 0.0;
    double gradient_norm = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Projected gradient descent with backtracking from one starting point.
LocalMinimum descend(const ObservableSet &obs, ComplexVector start,
                     const OptimizerOptions &options);

/// Global minimum of sum_uncertainty over pure states by multi-start descent.
/// Restart r draws its start from a generator seeded with (seed, r), so the
/// result does not depend on scheduling. Throws NonConvergence when no
/// restart reaches the tolerance, InvalidArgument when restarts == 0.
UncertaintyBound minimize_sum_uncertainty(const ObservableSet &obs,
                                          const OptimizerOptions &options = {});

/// Generator for restart `index` of a run seeded with `seed`.
std::mt19937_64 restart_stream(std::uint64_t seed, std::uint64_t index);

} // namespace entlur
