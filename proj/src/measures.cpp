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

#include "entlur/measures.hpp"

#include <algorithm>
#include <cmath>

#include "entlur/errors.hpp"
#include "entlur/operators.hpp"
#include "entlur/states.hpp"

namespace entlur {

// Wootters' lambdas are the singular values of tau_ij = v_i^T (Y (x) Y) v_j
// over the subnormalized eigenvectors v_i = sqrt(p_i) e_i of rho. They are
// read off the Hermitian dilation [[0, tau], [tau^H, 0]] so small values keep
// absolute accuracy instead of passing through a square root.
double concurrence(const DensityMatrix &rho, const Tolerances &tol) {
    if (rho.dim() != 4)
        throw DimMismatch("concurrence is defined for 2x2 systems (dim 4) only");
    const SpinMatrices s = pauli_matrices();
    const ComplexMatrix yy = tensor_product(s.y, s.y);

    const HermitianEigen rho_eig = eig_hermitian(rho.matrix(), tol);
    std::vector<ComplexVector> v;
    for (std::size_t k = 0; k < 4; ++k) {
        // Eigenvalues at rounding level are treated as exact zeros.
        if (rho_eig.values[k] <= tol.concurrence_clamp)
            continue;
        ComplexVector col(4);
        for (std::size_t r = 0; r < 4; ++r)
            col[r] = std::sqrt(rho_eig.values[k]) * rho_eig.vectors(r, k);
        v.push_back(std::move(col));
    }
    const std::size_t rank = v.size();
    if (rank == 0)
        return 0.0;

    ComplexMatrix dilation(2 * rank, 2 * rank);
    for (std::size_t j = 0; j < rank; ++j) {
        const ComplexVector yv = yy * v[j];
        for (std::size_t i = 0; i < rank; ++i) {
            Complex t{};
            for (std::size_t r = 0; r < 4; ++r)
                t += v[i][r] * yv[r];
            dilation(i, rank + j) = t;
            dilation(rank + j, i) = std::conj(t);
        }
    }
    const HermitianEigen eig = eig_hermitian(dilation, tol);
    double c = eig.values[0];
    for (std::size_t k = 1; k < rank; ++k)
        c -= std::abs(eig.values[k]);
    return std::clamp(c, 0.0, 1.0);
}

double werner_concurrence(double p_s) {
    const WernerParams checked(p_s);
    return std::max((3.0 * checked.singlet_fraction() - 1.0) / 2.0, 0.0);
}

} // namespace entlur
