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

#include "entlur/linalg.hpp"

namespace entlur {

/// Wootters concurrence of a two-qubit state. The spin-flipped state is
/// (s_y (x) s_y) rho^* (s_y (x) s_y) with conjugation in the stored basis;
/// the eigenvalues of rho rho~ are taken from the Hermitian form
/// sqrt(rho) rho~ sqrt(rho). Throws DimMismatch unless dim == 4.
double concurrence(const DensityMatrix &rho, const Tolerances &tol = default_tolerances());

/// max{(3 p_s - 1)/2, 0}
double werner_concurrence(double p_s);

} // namespace entlur
