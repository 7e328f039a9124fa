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

#include "entlur/operators.hpp"

#include <cmath>
#include <sstream>

#include "entlur/errors.hpp"

namespace entlur {

Spin Spin::from_twice(int twice_l) {
    if (twice_l < 1) {
        std::ostringstream msg;
        msg << "spin must be positive, got l = " << 0.5 * twice_l;
        throw InvalidSpin(msg.str());
    }
    return Spin(twice_l);
}

Spin Spin::from_value(double l) {
    const double twice = 2.0 * l;
    if (!std::isfinite(l) || l <= 0.0 || std::abs(twice - std::round(twice)) > 1e-12 ||
        twice > 1e6) {
        std::ostringstream msg;
        msg << "spin must be a positive half-integer, got l = " << l;
        throw InvalidSpin(msg.str());
    }
    return Spin(static_cast<int>(std::lround(twice)));
}

Spin Spin::from_dim(std::size_t dim) {
    if (dim < 2)
        throw InvalidSpin("spin system needs dimension N >= 2");
    return Spin(static_cast<int>(dim) - 1);
}

SpinMatrices spin_matrices(Spin spin) {
    const std::size_t n = spin.dim();
    const double l = spin.value();
    // Basis index k carries m = l - k.
    ComplexMatrix raise(n, n);
    RealVector mz(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double m = l - static_cast<double>(k);
        mz[k] = m;
        if (k > 0)
            raise(k - 1, k) = std::sqrt(l * (l + 1.0) - m * (m + 1.0));
    }
    const ComplexMatrix lower = raise.adjoint();
    SpinMatrices out;
    out.x = (raise + lower) * Complex(0.5);
    out.y = (raise - lower) * Complex(0.0, -0.5);
    out.z = ComplexMatrix::diagonal(mz);
    return out;
}

SpinMatrices pauli_matrices() {
    SpinMatrices half = spin_matrices(Spin::from_twice(1));
    half.x *= 2.0;
    half.y *= 2.0;
    half.z *= 2.0;
    return half;
}

ComplexMatrix partner_operator(const ComplexMatrix &a, const Tolerances &tol) {
    if (!a.is_hermitian(tol.hermitian))
        throw NotHermitian("partner_operator: input is not Hermitian");
    return -a.transpose();
}

int Spectrum::find(double value, double tol) const {
    int best = -1;
    double best_dist = tol;
    for (std::size_t k = 0; k < distinct_values.size(); ++k) {
        const double d = std::abs(distinct_values[k] - value);
        if (d <= best_dist) {
            best = static_cast<int>(k);
            best_dist = d;
        }
    }
    return best;
}

Spectrum spectrum_of(const ComplexMatrix &a, const Tolerances &tol) {
    Spectrum s;
    s.eigen = eig_hermitian(a, tol);
    const std::size_t n = s.eigen.values.size();
    // Eigenvalues closer than this are treated as one degenerate level.
    const double cluster = 1e-9 * std::max(1.0, std::abs(s.eigen.values.front()) +
                                                    std::abs(s.eigen.values.back()));
    std::size_t k = 0;
    while (k < n) {
        std::size_t end = k + 1;
        while (end < n && s.eigen.values[k] - s.eigen.values[end] <= cluster)
            ++end;
        double mean = 0.0;
        ComplexMatrix proj(n, n);
        for (std::size_t c = k; c < end; ++c) {
            mean += s.eigen.values[c];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    proj(i, j) += s.eigen.vectors(i, c) * std::conj(s.eigen.vectors(j, c));
        }
        s.distinct_values.push_back(mean / static_cast<double>(end - k));
        s.projectors.push_back(std::move(proj));
        k = end;
    }
    return s;
}

ObservableSet::ObservableSet(std::string label, std::vector<ComplexMatrix> operators,
                             std::vector<std::string> names, const Tolerances &tol)
    : label_(std::move(label)), operators_(std::move(operators)), names_(std::move(names)) {
    if (operators_.empty())
        throw InvalidArgument("observable set '" + label_ + "' is empty");
    const std::size_t n = operators_.front().rows();
    for (std::size_t i = 0; i < operators_.size(); ++i) {
        const ComplexMatrix &op = operators_[i];
        if (!op.is_square() || op.rows() != n)
            throw DimMismatch("observable set '" + label_ + "' mixes operator dimensions");
        if (!op.is_hermitian(tol.hermitian)) {
            std::ostringstream msg;
            msg << "operator " << i << " of set '" << label_ << "' is not Hermitian";
            throw NotHermitian(msg.str());
        }
    }
    if (names_.empty()) {
        for (std::size_t i = 0; i < operators_.size(); ++i)
            names_.push_back(std::to_string(i));
    }
    if (names_.size() != operators_.size())
        throw InvalidArgument("observable set '" + label_ + "': one name per operator required");
    for (const auto &op : operators_) {
        spectra_.push_back(spectrum_of(op, tol));
        squares_.push_back(op * op);
    }
}

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = gauss(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            h(i, j) = Complex(re, im) / std::sqrt(2.0);
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

ComplexMatrix rotation(Spin l, char axis, double angle) {
    const SpinMatrices s = spin_matrices(l);
    switch (axis) {
    case 'x': return unitary_exp(s.x, angle);
    case 'y': return unitary_exp(s.y, angle);
    case 'z': return unitary_exp(s.z, angle);
    default: throw InvalidArgument(std::string("rotation axis must be x, y or z, got ") + axis);
    }
}

} // namespace entlur
