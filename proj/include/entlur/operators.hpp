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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "entlur/linalg.hpp"

namespace entlur {

/// Spin quantum number l, stored exactly as 2l so half-integers are exact.
class Spin {
  public:
    /// Throws InvalidSpin unless twice_l >= 1.
    static Spin from_twice(int twice_l);
    /// Throws InvalidSpin unless l > 0 and 2l is an integer.
    static Spin from_value(double l);
    /// Throws InvalidSpin unless dim >= 2.
    static Spin from_dim(std::size_t dim);

    int twice() const noexcept { return twice_l_; }
    double value() const noexcept { return 0.5 * twice_l_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(twice_l_) + 1; }

    friend bool operator==(Spin, Spin) = default;

  private:
    explicit Spin(int twice_l) : twice_l_(twice_l) {}
    int twice_l_;
};

struct SpinMatrices {
    ComplexMatrix x, y, z;
};

/// Angular momentum matrices in the basis |+l>, |l-1>, ..., |-l>, built from
/// Condon-Shortley ladder operators.
SpinMatrices spin_matrices(Spin l);

/// sigma_i = 2 L_i for spin 1/2.
SpinMatrices pauli_matrices();

/// -a^T, the operator B with (a (x) 1 + 1 (x) B) annihilating sum_n |n,n>.
/// Throws NotHermitian.
ComplexMatrix partner_operator(const ComplexMatrix &a,
                               const Tolerances &tol = default_tolerances());

/// Eigen-decomposition of one observable with degenerate eigenvalues pooled
/// into a single projector per distinct value.
struct Spectrum {
    HermitianEigen eigen;
    /// Distinct eigenvalues, descending.
    RealVector distinct_values;
    /// Projector onto the eigenspace of distinct_values[k].
    std::vector<ComplexMatrix> projectors;

    /// Index into distinct_values within tol, or -1.
    int find(double value, double tol) const;
};

Spectrum spectrum_of(const ComplexMatrix &a, const Tolerances &tol = default_tolerances());

/// Labeled set of same-dimension Hermitian observables with cached spectra.
class ObservableSet {
  public:
    /// Names default to "0", "1", ...; throws InvalidArgument on an empty
    /// list, DimMismatch on mixed dimensions, NotHermitian on bad operators.
    ObservableSet(std::string label, std::vector<ComplexMatrix> operators,
                  std::vector<std::string> names = {},
                  const Tolerances &tol = default_tolerances());

    const std::string &label() const noexcept { return label_; }
    std::size_t size() const noexcept { return operators_.size(); }
    std::size_t dim() const noexcept { return operators_.front().rows(); }
    const std::vector<ComplexMatrix> &operators() const noexcept { return operators_; }
    const ComplexMatrix &operator[](std::size_t i) const { return operators_[i]; }
    const std::vector<std::string> &names() const noexcept { return names_; }
    const Spectrum &spectrum(std::size_t i) const { return spectra_[i]; }
    /// A_i^2, cached for variance evaluation.
    const ComplexMatrix &squared(std::size_t i) const { return squares_[i]; }

  private:
    std::string label_;
    std::vector<ComplexMatrix> operators_;
    std::vector<std::string> names_;
    std::vector<Spectrum> spectra_;
    std::vector<ComplexMatrix> squares_;
};

/// Hermitian matrix with i.i.d. complex Gaussian entries (GUE up to scale).
ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng);

/// exp(-i angle L_axis) for the given spin; axis is 'x', 'y' or 'z'.
ComplexMatrix rotation(Spin l, char axis, double angle);

} // namespace entlur
