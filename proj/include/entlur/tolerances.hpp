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

namespace entlur {

/// Every numerical threshold used by validating constructors and verdicts.
/// Defaults are the library-wide contract; callers override them through
/// the CLI `--config` file or by passing a modified copy.
struct Tolerances {
    /// Euclidean norm deviation allowed for a pure state.
    double norm = 1e-12;
    /// Max elementwise |m - m^dagger| for a matrix to count as Hermitian.
    double hermitian = 1e-10;
    /// |tr(rho) - 1| allowed for a density matrix.
    double trace = 1e-10;
    /// Smallest eigenvalue of a density matrix must be >= -psd.
    double psd = 1e-9;
    /// |Im tr(rho a)| allowed before an expectation value is rejected.
    double expectation_imag = 1e-10;
    /// Variances in [-variance_clamp, 0) are rounded to zero.
    double variance_clamp = 1e-12;
    /// Entangled verdict requires total < bound - judge.
    double judge = 1e-9;
    /// Matching distance between file outcomes and operator eigenvalues.
    double outcome_match = 1e-9;
    /// |sum of probabilities - 1| allowed in a measurement dataset.
    double probability_sum = 1e-6;
    /// Mixture weights must sum to one within this.
    double mixture_weights = 1e-12;
    /// Negative eigenvalues of the concurrence product above -this are zeroed.
    double concurrence_clamp = 1e-12;
};

inline const Tolerances &default_tolerances() {
    static const Tolerances defaults{};
    return defaults;
}

} // namespace entlur
