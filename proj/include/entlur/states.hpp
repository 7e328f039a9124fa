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

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "entlur/linalg.hpp"
#include "entlur/operators.hpp"

namespace entlur {

/// Singlet fraction of a Werner state, validated to lie in [0, 1].
class WernerParams {
  public:
    explicit WernerParams(double singlet_fraction);
    double singlet_fraction() const noexcept { return p_s_; }

  private:
    double p_s_;
};

struct MixtureTerm {
    double weight;
    DensityMatrix state;
};

/// (1/sqrt(N)) sum_m (-1)^(l-m) |m> (x) |-m>, the joint state annihilated by
/// every L_i(A) + L_i(B). The |+l,-l> coefficient is positive.
PureState singlet(Spin l);

/// (1/sqrt(N)) sum_n |n,n>. Throws InvalidArgument for N < 2.
PureState max_entangled(std::size_t n);

/// (1 - p_s) 1/4 + p_s |singlet><singlet| for two qubits.
DensityMatrix werner(WernerParams p);

/// Spin-1 pair: p_s |singlet><singlet| plus (1 - p_s)/3 spread over the
/// L_x-basis product states |+1;-1>, |0;0>, |-1;+1>. Built in the L_x basis
/// and rotated into the stored L_z basis.
DensityMatrix noise_model_state(double p_s);

/// Convex combination; weights must be nonnegative and sum to one.
DensityMatrix mix(const std::vector<MixtureTerm> &terms,
                  const Tolerances &tol = default_tolerances());

/// Haar-random pure state by normalizing a complex Gaussian vector. The
/// global phase is fixed so the first amplitude is real and nonnegative.
PureState random_pure(std::size_t n, std::mt19937_64 &rng);

/// Random mixed state G G^dagger / tr, G an n x rank complex Gaussian matrix.
DensityMatrix random_density(std::size_t n, std::size_t rank, std::mt19937_64 &rng);

/// Uniform point on the probability simplex with `terms` vertices.
RealVector random_simplex_weights(std::size_t terms, std::mt19937_64 &rng);

/// sum_m p_m |a_m><a_m| (x) |b_m><b_m| with Haar-random factors and
/// Dirichlet(1, ..., 1) weights.
DensityMatrix random_separable_mixture(std::size_t dim_a, std::size_t dim_b, std::size_t terms,
                                       std::mt19937_64 &rng);

// State files: {"dim": N, "kind": "density"|"pure", "data": ...} with
// complex numbers as [re, im] pairs, rows in order.

struct StateFile {
    std::string kind;  ///< "pure" or "density"
    DensityMatrix rho;
};

/// Throws SchemaError on malformed input and InvalidState on invariant
/// violations (norm, trace, hermiticity, positivity).
StateFile state_from_json(const nlohmann::json &doc, const Tolerances &tol = default_tolerances());
nlohmann::ordered_json state_to_json(const PureState &psi);
nlohmann::ordered_json state_to_json(const DensityMatrix &rho);

} // namespace entlur
