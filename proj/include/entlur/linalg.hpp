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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "entlur/tolerances.hpp"

namespace entlur {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Dense row-major complex matrix for small operator and state dimensions.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Row-by-row literal, e.g. {{0, -kI}, {kI, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><w|
    static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<const Complex> entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;

    /// Largest |m_ij - m_ji^*|; zero for an exactly Hermitian matrix.
    double hermiticity_error() const;
    bool is_hermitian(double tol) const;
    bool all_finite() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> v);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v);

/// Max elementwise |a - b|; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix adjoint(const ComplexMatrix &m);

/// Kronecker product with a-index major, b-index minor.
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector tensor_product(std::span<const Complex> a, std::span<const Complex> b);

/// <v|w>, antilinear in v.
Complex inner(std::span<const Complex> v, std::span<const Complex> w);
double norm(std::span<const Complex> v);

struct HermitianEigen {
    RealVector values;          ///< descending
    ComplexMatrix vectors;      ///< orthonormal eigenvectors as columns
};

/// Cyclic complex Jacobi diagonalization. Throws NotHermitian when the input
/// deviates from its adjoint by more than tol.hermitian.
HermitianEigen eig_hermitian(const ComplexMatrix &m,
                             const Tolerances &tol = default_tolerances());

/// Rebuilds V diag(f(lambda)) V^dagger.
template <typename F>
ComplexMatrix spectral_apply(const HermitianEigen &eig, F &&fn) {
    const std::size_t n = eig.values.size();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex w = fn(eig.values[k]);
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = eig.vectors(i, k) * w;
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += vik * std::conj(eig.vectors(j, k));
        }
    }
    return out;
}

/// exp(-i * angle * h) for Hermitian h.
ComplexMatrix unitary_exp(const ComplexMatrix &h, double angle,
                          const Tolerances &tol = default_tolerances());

/// Normalized ket. Validated on construction.
class PureState {
  public:
    explicit PureState(ComplexVector amplitudes, const Tolerances &tol = default_tolerances());
    /// Scales by 1/norm first; rejects zero or non-finite vectors.
    static PureState normalized(ComplexVector amplitudes);

    std::size_t dim() const noexcept { return amplitudes_.size(); }
    const ComplexVector &amplitudes() const noexcept { return amplitudes_; }
    Complex operator[](std::size_t k) const { return amplitudes_[k]; }

  private:
    struct Unchecked {};
    PureState(ComplexVector amplitudes, Unchecked) : amplitudes_(std::move(amplitudes)) {}
    ComplexVector amplitudes_;
};

/// Trace-one positive semidefinite Hermitian matrix. Validated on construction.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix matrix, const Tolerances &tol = default_tolerances());
    explicit DensityMatrix(const PureState &psi);

    std::size_t dim() const noexcept { return matrix_.rows(); }
    const ComplexMatrix &matrix() const noexcept { return matrix_; }

  private:
    ComplexMatrix matrix_;
};

/// tr(rho a) for Hermitian a. Throws DimMismatch or NotHermitian, and
/// InternalConsistency when the imaginary part exceeds tol.expectation_imag.
double expectation(const DensityMatrix &rho, const ComplexMatrix &a,
                   const Tolerances &tol = default_tolerances());
/// <psi|a|psi>
double expectation(const PureState &psi, const ComplexMatrix &a,
                   const Tolerances &tol = default_tolerances());

DensityMatrix tensor_product(const DensityMatrix &a, const DensityMatrix &b);
PureState tensor_product(const PureState &a, const PureState &b);

} // namespace entlur
