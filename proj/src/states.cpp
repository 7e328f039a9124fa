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

#include "entlur/states.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include "entlur/errors.hpp"

namespace entlur {

WernerParams::WernerParams(double singlet_fraction) : p_s_(singlet_fraction) {
    if (!(singlet_fraction >= 0.0 && singlet_fraction <= 1.0)) {
        std::ostringstream msg;
        msg << "singlet fraction must lie in [0, 1], got " << singlet_fraction;
        throw InvalidArgument(msg.str());
    }
}

PureState singlet(Spin l) {
    const std::size_t n = l.dim();
    ComplexVector amp(n * n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    // Index k has m = l - k, so |-m> sits at index n - 1 - k and (-1)^(l-m) = (-1)^k.
    for (std::size_t k = 0; k < n; ++k)
        amp[k * n + (n - 1 - k)] = (k % 2 == 0 ? scale : -scale);
    return PureState::normalized(std::move(amp));
}

PureState max_entangled(std::size_t n) {
    if (n < 2)
        throw InvalidArgument("max_entangled requires N >= 2");
    ComplexVector amp(n * n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k)
        amp[k * n + k] = scale;
    return PureState::normalized(std::move(amp));
}

DensityMatrix werner(WernerParams p) {
    const double ps = p.singlet_fraction();
    const PureState s = singlet(Spin::from_twice(1));
    ComplexMatrix rho = ComplexMatrix::identity(4) * Complex((1.0 - ps) / 4.0);
    rho += ComplexMatrix::outer(s.amplitudes(), s.amplitudes()) * Complex(ps);
    return DensityMatrix(std::move(rho));
}

DensityMatrix noise_model_state(double p_s) {
    const WernerParams checked(p_s);
    const Spin one = Spin::from_twice(2);
    const std::size_t n = one.dim();

    // Coefficients below are with respect to the L_x eigenbasis |+1>, |0>, |-1>.
    const PureState s = singlet(one);
    ComplexMatrix rho_x = ComplexMatrix::outer(s.amplitudes(), s.amplitudes()) *
                          Complex(checked.singlet_fraction());
    const double noise = (1.0 - checked.singlet_fraction()) / 3.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t idx = k * n + (n - 1 - k);
        rho_x(idx, idx) += noise;
    }

    // R = exp(-i pi/2 L_y) maps |m>_z onto the L_x eigenvector |m>_x.
    const ComplexMatrix r = rotation(one, 'y', std::numbers::pi / 2.0);
    const ComplexMatrix rr = tensor_product(r, r);
    ComplexMatrix rho_z = rr * rho_x * rr.adjoint();
    // Restore exact Hermiticity lost to rounding in the rotation.
    rho_z = (rho_z + rho_z.adjoint()) * Complex(0.5);
    return DensityMatrix(std::move(rho_z));
}

DensityMatrix mix(const std::vector<MixtureTerm> &terms, const Tolerances &tol) {
    if (terms.empty())
        throw InvalidArgument("mixture needs at least one term");
    const std::size_t n = terms.front().state.dim();
    ComplexMatrix acc(n, n);
    double total = 0.0;
    for (const auto &term : terms) {
        if (!(term.weight >= 0.0))
            throw InvalidArgument("mixture weights must be nonnegative");
        if (term.state.dim() != n)
            throw DimMismatch("mixture terms have different dimensions");
        acc += term.state.matrix() * Complex(term.weight);
        total += term.weight;
    }
    if (!(std::abs(total - 1.0) <= tol.mixture_weights)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "mixture weights sum to " << total << ", not 1";
        throw InvalidArgument(msg.str());
    }
    return DensityMatrix(std::move(acc), tol);
}

PureState random_pure(std::size_t n, std::mt19937_64 &rng) {
    if (n < 1)
        throw InvalidArgument("random_pure requires N >= 1");
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector amp(n);
    double nrm = 0.0;
    while (!(nrm > 1e-150)) {
        for (auto &z : amp) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z = Complex(re, im);
        }
        nrm = norm(amp);
    }
    const double a0 = std::abs(amp[0]);
    if (a0 > 0.0) {
        const Complex phase = std::conj(amp[0]) / a0;
        for (auto &z : amp)
            z *= phase;
        amp[0] = Complex(amp[0].real(), 0.0);
    }
    return PureState::normalized(std::move(amp));
}

DensityMatrix random_density(std::size_t n, std::size_t rank, std::mt19937_64 &rng) {
    if (n < 1 || rank < 1)
        throw InvalidArgument("random_density requires N >= 1 and rank >= 1");
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(n, rank);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = Complex(re, im);
        }
    ComplexMatrix rho = g * g.adjoint();
    rho = (rho + rho.adjoint()) * Complex(0.5);
    rho *= 1.0 / rho.trace().real();
    return DensityMatrix(std::move(rho));
}

RealVector random_simplex_weights(std::size_t terms, std::mt19937_64 &rng) {
    if (terms < 1)
        throw InvalidArgument("simplex sampling needs at least one term");
    std::exponential_distribution<double> expo(1.0);
    RealVector w(terms);
    double total = 0.0;
    for (auto &x : w) {
        x = expo(rng);
        total += x;
    }
    for (auto &x : w)
        x /= total;
    return w;
}

DensityMatrix random_separable_mixture(std::size_t dim_a, std::size_t dim_b, std::size_t terms,
                                       std::mt19937_64 &rng) {
    if (terms < 1)
        throw InvalidArgument("separable mixture needs at least one term");
    const RealVector weights = random_simplex_weights(terms, rng);
    const std::size_t n = dim_a * dim_b;
    ComplexMatrix acc(n, n);
    for (std::size_t m = 0; m < terms; ++m) {
        const PureState a = random_pure(dim_a, rng);
        const PureState b = random_pure(dim_b, rng);
        const PureState ab = tensor_product(a, b);
        acc += ComplexMatrix::outer(ab.amplitudes(), ab.amplitudes()) * Complex(weights[m]);
    }
    acc = (acc + acc.adjoint()) * Complex(0.5);
    return DensityMatrix(std::move(acc));
}

namespace {

Complex complex_from_json(const nlohmann::json &v, const char *where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw SchemaError(std::string(where) + ": complex entries must be [re, im] number pairs");
    return Complex(v[0].get<double>(), v[1].get<double>());
}

nlohmann::ordered_json complex_to_json(Complex z) {
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

} // namespace

StateFile state_from_json(const nlohmann::json &doc, const Tolerances &tol) {
    if (!doc.is_object())
        throw SchemaError("state file: top level must be an object");
    for (const char *key : {"dim", "kind", "data"})
        if (!doc.contains(key))
            throw SchemaError(std::string("state file: missing key '") + key + "'");
    if (!doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() <= 0)
        throw SchemaError("state file: 'dim' must be a positive integer");
    if (!doc["kind"].is_string())
        throw SchemaError("state file: 'kind' must be a string");
    const auto n = doc["dim"].get<std::size_t>();
    const auto kind = doc["kind"].get<std::string>();
    const auto &data = doc["data"];
    if (!data.is_array() || data.size() != n)
        throw SchemaError("state file: 'data' must be an array of length dim");

    if (kind == "pure") {
        ComplexVector amp;
        amp.reserve(n);
        for (const auto &z : data)
            amp.push_back(complex_from_json(z, "state file"));
        return StateFile{kind, DensityMatrix(PureState(std::move(amp), tol))};
    }
    if (kind == "density") {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!data[i].is_array() || data[i].size() != n)
                throw SchemaError("state file: density rows must have length dim");
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = complex_from_json(data[i][j], "state file");
        }
        return StateFile{kind, DensityMatrix(std::move(m), tol)};
    }
    throw SchemaError("state file: 'kind' must be \"pure\" or \"density\", got \"" + kind + "\"");
}

nlohmann::ordered_json state_to_json(const PureState &psi) {
    nlohmann::ordered_json doc;
    doc["dim"] = psi.dim();
    doc["kind"] = "pure";
    auto data = nlohmann::ordered_json::array();
    for (const Complex &z : psi.amplitudes())
        data.push_back(complex_to_json(z));
    doc["data"] = std::move(data);
    return doc;
}

nlohmann::ordered_json state_to_json(const DensityMatrix &rho) {
    nlohmann::ordered_json doc;
    doc["dim"] = rho.dim();
    doc["kind"] = "density";
    auto data = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < rho.dim(); ++j)
            row.push_back(complex_to_json(rho.matrix()(i, j)));
        data.push_back(std::move(row));
    }
    doc["data"] = std::move(data);
    return doc;
}

} // namespace entlur
