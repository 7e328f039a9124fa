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

#include <gtest/gtest.h>

#include <cmath>

#include "entlur/errors.hpp"
#include "entlur/operators.hpp"
#include "entlur/states.hpp"
#include "test_util.hpp"

using namespace entlur;

namespace {

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) { return a * b - b * a; }

} // namespace

TEST(Spin, Validation) {
    EXPECT_THROW(Spin::from_value(0.0), InvalidSpin);
    EXPECT_THROW(Spin::from_value(-1.0), InvalidSpin);
    EXPECT_THROW(Spin::from_value(0.7), InvalidSpin);
    EXPECT_THROW(Spin::from_twice(0), InvalidSpin);
    EXPECT_THROW(Spin::from_dim(1), InvalidSpin);
    EXPECT_EQ(Spin::from_value(1.5).dim(), 4u);
    EXPECT_EQ(Spin::from_dim(3), Spin::from_twice(2));
}

TEST(Spin, HalfLz) {
    const SpinMatrices s = spin_matrices(Spin::from_twice(1));
    EXPECT_EQ(s.z(0, 0), Complex(0.5));
    EXPECT_EQ(s.z(1, 1), Complex(-0.5));
    EXPECT_EQ(s.z(0, 1), Complex(0.0));
}

TEST(Spin, SpinOneLxOffDiagonals) {
    const SpinMatrices s = spin_matrices(Spin::from_twice(2));
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s.x(0, 1) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.x(1, 0) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.x(1, 2) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.x(2, 1) - r), 0.0, 1e-15);
    EXPECT_EQ(s.x(0, 2), Complex(0.0));
}

TEST(Spin, CasimirAndCommutators) {
    for (int twice = 1; twice <= 10; ++twice) {
        const Spin l = Spin::from_twice(twice);
        const SpinMatrices s = spin_matrices(l);
        const double ll = l.value() * (l.value() + 1.0);
        const ComplexMatrix casimir = s.x * s.x + s.y * s.y + s.z * s.z;
        EXPECT_LE(max_abs_diff(casimir, ComplexMatrix::identity(l.dim()) * Complex(ll)), 1e-12);
        EXPECT_LE(max_abs_diff(commutator(s.x, s.y), s.z * kI), 1e-12);
        EXPECT_LE(max_abs_diff(commutator(s.y, s.z), s.x * kI), 1e-12);
        EXPECT_LE(max_abs_diff(commutator(s.z, s.x), s.y * kI), 1e-12);
    }
}

TEST(Spin, EveryAxisHasSpectrumMinusLToL) {
    for (int twice = 1; twice <= 8; ++twice) {
        const Spin l = Spin::from_twice(twice);
        const SpinMatrices s = spin_matrices(l);
        for (const ComplexMatrix *axis : {&s.x, &s.y, &s.z}) {
            const HermitianEigen e = eig_hermitian(*axis);
            for (std::size_t k = 0; k < l.dim(); ++k)
                EXPECT_NEAR(e.values[k], l.value() - static_cast<double>(k), 1e-12);
        }
    }
}

TEST(Pauli, Algebra) {
    const SpinMatrices p = pauli_matrices();
    const double d[] = {1.0, -1.0};
    EXPECT_EQ(max_abs_diff(p.z, ComplexMatrix::diagonal(d)), 0.0);
    EXPECT_LE(max_abs_diff(p.x * p.y, p.z * kI), 1e-15);
    const SpinMatrices half = spin_matrices(Spin::from_twice(1));
    EXPECT_LE(max_abs_diff(p.y, half.y * Complex(2.0)), 0.0);
    for (const ComplexMatrix *m : {&p.x, &p.y, &p.z}) {
        const HermitianEigen e = eig_hermitian(*m);
        EXPECT_NEAR(e.values[0], 1.0, 1e-15);
        EXPECT_NEAR(e.values[1], -1.0, 1e-15);
    }
}

TEST(Partner, Examples) {
    const SpinMatrices p = pauli_matrices();
    EXPECT_EQ(max_abs_diff(partner_operator(p.y), p.y), 0.0);
    EXPECT_EQ(max_abs_diff(partner_operator(p.z), -p.z), 0.0);
    const ComplexMatrix skew{{0.0, 1.0}, {-1.0, 0.0}};
    EXPECT_THROW(partner_operator(skew), NotHermitian);
}

TEST(Partner, AnnihilatesMaxEntangledAndIsInvolutive) {
    auto rng = test::rng_for(3);
    for (std::size_t n = 2; n <= 6; ++n) {
        const PureState e = max_entangled(n);
        for (int trial = 0; trial < 10; ++trial) {
            const ComplexMatrix a = random_hermitian(n, rng);
            const ComplexMatrix b = partner_operator(a);
            EXPECT_TRUE(b.is_hermitian(1e-14));
            EXPECT_EQ(max_abs_diff(partner_operator(b), a), 0.0);
            const ComplexMatrix joint = tensor_product(a, ComplexMatrix::identity(n)) +
                                        tensor_product(ComplexMatrix::identity(n), b);
            EXPECT_LE(norm(joint * e.amplitudes()), 1e-10);
        }
    }
}

TEST(ObservableSet, Validation) {
    const SpinMatrices p = pauli_matrices();
    EXPECT_THROW(ObservableSet("empty", {}), InvalidArgument);
    EXPECT_THROW(ObservableSet("mixed", {p.x, ComplexMatrix::identity(3)}), DimMismatch);
    EXPECT_THROW(ObservableSet("bad", {ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}}), NotHermitian);
    const ObservableSet set("pauli", {p.x, p.z}, {"x", "z"});
    EXPECT_EQ(set.size(), 2u);
    EXPECT_EQ(set.names()[1], "z");
    EXPECT_EQ(set.spectrum(1).distinct_values.size(), 2u);
}

TEST(ObservableSet, DegenerateSpectrumPoolsProjectors) {
    const SpinMatrices s = spin_matrices(Spin::from_twice(2));
    const ComplexMatrix joint = tensor_product(s.z, ComplexMatrix::identity(3)) +
                                tensor_product(ComplexMatrix::identity(3), s.z);
    const Spectrum spec = spectrum_of(joint);
    // {2, 1, 1, 0, 0, 0, -1, -1, -2}
    ASSERT_EQ(spec.distinct_values.size(), 5u);
    const double expected_rank[] = {1, 2, 3, 2, 1};
    for (std::size_t k = 0; k < 5; ++k) {
        EXPECT_NEAR(spec.distinct_values[k], 2.0 - static_cast<double>(k), 1e-12);
        EXPECT_NEAR(spec.projectors[k].trace().real(), expected_rank[k], 1e-12);
    }
    EXPECT_EQ(spec.find(0.0, 1e-9), 2);
    EXPECT_EQ(spec.find(0.5, 1e-9), -1);
}

TEST(Rotation, MapsLzOntoLx) {
    for (int twice = 1; twice <= 4; ++twice) {
        const Spin l = Spin::from_twice(twice);
        const SpinMatrices s = spin_matrices(l);
        const ComplexMatrix r = rotation(l, 'y', std::acos(-1.0) / 2.0);
        EXPECT_LE(max_abs_diff(r * s.z * r.adjoint(), s.x), 1e-12);
    }
}
