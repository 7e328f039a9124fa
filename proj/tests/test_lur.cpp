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
#include "entlur/lur.hpp"
#include "entlur/measures.hpp"
#include "entlur/states.hpp"
#include "test_util.hpp"

using namespace entlur;

namespace {

OptimizerOptions quick(std::uint64_t seed = 0) {
    OptimizerOptions o;
    o.restarts = 8;
    o.seed = seed;
    o.threads = 1;
    return o;
}

std::vector<BoundKind> builtin_kinds() {
    return {BoundKind::pauli3(), BoundKind::pauli2(), BoundKind::spin3(Spin::from_twice(2)),
            BoundKind::spin1_xy()};
}

} // namespace

TEST(JointOperator, Examples) {
    const SpinMatrices p = pauli_matrices();
    const ComplexMatrix zz = joint_operator(p.z, p.z);
    const RealVector diag{2.0, 0.0, 0.0, -2.0};
    EXPECT_EQ(max_abs_diff(zz, ComplexMatrix::diagonal(diag)), 0.0);

    const SpinMatrices s = spin_matrices(Spin::from_twice(2));
    const ComplexMatrix mixed = joint_operator(p.z, s.z);
    EXPECT_EQ(mixed.rows(), 6u);
    const HermitianEigen e = eig_hermitian(mixed);
    const RealVector expected{2.0, 1.0, 0.0, 0.0, -1.0, -2.0};
    for (std::size_t k = 0; k < 6; ++k)
        EXPECT_NEAR(e.values[k], expected[k], 1e-12);

    ComplexMatrix bad = p.x;
    bad(0, 1) = Complex(0.0, 1.0);
    EXPECT_THROW(joint_operator(bad, p.x), NotHermitian);
}

TEST(LURSpec, BuiltinBoundsAndLabels) {
    EXPECT_DOUBLE_EQ(builtin_spec(BoundKind::pauli3()).bound(), 4.0);
    EXPECT_DOUBLE_EQ(builtin_spec(BoundKind::pauli2()).bound(), 2.0);
    EXPECT_DOUBLE_EQ(builtin_spec(BoundKind::spin1_xy()).bound(), 7.0 / 8.0);
    EXPECT_DOUBLE_EQ(builtin_spec("spin3_lur", 1.5).bound(), 3.0);
    EXPECT_EQ(builtin_spec("pauli3").label(), "pauli3_lur");
    EXPECT_EQ(builtin_spec("spin3", 1.0).label(), "spin3_lur(l=1)");
    EXPECT_EQ(builtin_spec("pauli2_lur").setting_label(1), "y");
    EXPECT_THROW(builtin_spec("bogus"), InvalidArgument);
}

TEST(LURSpec, Validation) {
    const ObservableSet p3 = BoundKind::pauli3().observables();
    const ObservableSet p2 = BoundKind::pauli2().observables();
    const UncertaintyBound ok = analytic_bound(BoundKind::pauli3());
    EXPECT_THROW(LURSpec("bad", p3, p2, ok, ok), InvalidArgument);
    UncertaintyBound zero = ok;
    zero.value = 0.0;
    EXPECT_THROW(LURSpec("bad", p3, p3, zero, zero), InvalidArgument);
}

TEST(Evaluate, Examples) {
    const LURSpec p3 = builtin_spec(BoundKind::pauli3());
    const LURReport s = evaluate(DensityMatrix(singlet(Spin::from_twice(1))), p3);
    EXPECT_NEAR(s.total, 0.0, 1e-12);
    EXPECT_NEAR(s.c_lur, 1.0, 1e-12);
    EXPECT_EQ(s.verdict, Verdict::Entangled);

    const LURReport w = evaluate(werner(WernerParams(0.5)), p3);
    EXPECT_NEAR(w.total, 3.0, 1e-12);
    EXPECT_NEAR(w.c_lur, 0.25, 1e-12);
    EXPECT_NEAR(w.margin, -1.0, 1e-12);

    const LURReport mixed = evaluate(werner(WernerParams(0.0)), p3);
    EXPECT_NEAR(mixed.total, 6.0, 1e-12);
    EXPECT_EQ(mixed.verdict, Verdict::Inconclusive);

    const LURReport noise = evaluate(noise_model_state(0.69), builtin_spec(BoundKind::spin1_xy()));
    EXPECT_NEAR(noise.c_lur, (32.0 * 0.69 - 11.0) / 21.0, 1e-10);
    EXPECT_NEAR(noise.c_lur, 0.52762, 1e-5);

    EXPECT_THROW(evaluate(werner(WernerParams(0.5)), builtin_spec(BoundKind::spin1_xy())),
                 DimMismatch);
}

TEST(Evaluate, VerdictUsesJudgeTolerance) {
    const LURSpec p2 = builtin_spec(BoundKind::pauli2());
    EXPECT_EQ(make_report(p2, {1.0, 1.0 - 5e-10}).verdict, Verdict::Inconclusive);
    EXPECT_EQ(make_report(p2, {1.0, 1.0 - 2e-9}).verdict, Verdict::Entangled);
    EXPECT_THROW(make_report(p2, {1.0}), InvalidArgument);
}

TEST(ProductMinimum, SaturatesBuiltinBounds) {
    for (const BoundKind &kind : builtin_kinds()) {
        const LURSpec spec = builtin_spec(kind);
        const ProductMinimum m = min_over_product_states(spec, quick());
        EXPECT_NEAR(m.value, spec.bound(), 1e-6) << spec.label();
        const PureState ab = tensor_product(PureState(m.alpha), PureState(m.beta));
        EXPECT_NEAR(evaluate(DensityMatrix(ab), spec).total, m.value, 1e-12);
    }
}

TEST(Separable, NeverViolates) {
    auto rng = test::rng_for(31);
    for (const BoundKind &kind : builtin_kinds()) {
        const LURSpec spec = builtin_spec(kind);
        for (int k = 0; k < 1000; ++k) {
            const DensityMatrix rho =
                random_separable_mixture(spec.dim_a(), spec.dim_b(), 1 + k % 8, rng);
            const LURReport r = evaluate(rho, spec);
            EXPECT_GE(r.total, spec.bound() - 1e-10) << spec.label();
            EXPECT_EQ(r.verdict, Verdict::Inconclusive);
        }
    }
}

TEST(Evaluate, CLurAtMostOne) {
    auto rng = test::rng_for(32);
    for (const BoundKind &kind : builtin_kinds()) {
        const LURSpec spec = builtin_spec(kind);
        const std::size_t n = spec.dim_a() * spec.dim_b();
        for (int k = 0; k < 200; ++k)
            EXPECT_LE(evaluate(random_density(n, 1 + k % n, rng), spec).c_lur, 1.0 + 1e-12);
    }
}

TEST(MaxEntangledSpec, PartnerSettingsVanish) {
    auto rng = test::rng_for(33);
    for (int k = 0; k < 5; ++k) {
        const ObservableSet obs("random", {random_hermitian(3, rng), random_hermitian(3, rng)});
        const LURSpec spec = max_entangled_spec(obs, quick(k));
        EXPECT_FALSE(spec.bound_a().is_analytic());
        const LURReport r = evaluate(DensityMatrix(max_entangled(3)), spec);
        EXPECT_LE(r.total, 1e-10);
        EXPECT_EQ(r.verdict, Verdict::Entangled);
    }
}

TEST(Werner, CLurMatchesConcurrenceAboveOneThird) {
    const LURSpec p3 = builtin_spec(BoundKind::pauli3());
    const LURSpec p2 = builtin_spec(BoundKind::pauli2());
    for (int k = 0; k <= 100; ++k) {
        const double ps = 1.0 / 3.0 + (2.0 / 3.0) * k / 100.0;
        const DensityMatrix rho = werner(WernerParams(ps));
        const double c3 = evaluate(rho, p3).c_lur;
        EXPECT_NEAR(c3, concurrence(rho), 1e-10);
        EXPECT_NEAR(c3, (3.0 * ps - 1.0) / 2.0, 1e-12);
        const double c2 = evaluate(rho, p2).c_lur;
        EXPECT_NEAR(c2, 2.0 * ps - 1.0, 1e-12);
        if (ps < 1.0 - 1e-12)
            EXPECT_LT(c2, c3);
    }
}

TEST(BellMixture, CLurMatchesConcurrenceWhenSingletDominates) {
    // Each triplet Bell state adds 2 + 2<s_i s_i> = 4 to two of the three joint
    // variances, so the total is 8 (1 - w_singlet) and C_LUR = 2 w_singlet - 1.
    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<PureState> bell{
        PureState(ComplexVector{0.0, r, -r, 0.0}), PureState(ComplexVector{0.0, r, r, 0.0}),
        PureState(ComplexVector{r, 0.0, 0.0, r}), PureState(ComplexVector{r, 0.0, 0.0, -r})};
    const LURSpec p3 = builtin_spec(BoundKind::pauli3());
    auto rng = test::rng_for(34);
    std::uniform_real_distribution<double> dominant(0.5, 1.0);
    for (int k = 0; k < 200; ++k) {
        const double ws = dominant(rng);
        const RealVector rest = random_simplex_weights(3, rng);
        std::vector<MixtureTerm> terms{{ws, DensityMatrix(bell[0])}};
        for (std::size_t j = 0; j < 3; ++j)
            terms.push_back({(1.0 - ws) * rest[j], DensityMatrix(bell[j + 1])});
        const DensityMatrix rho = mix(terms);
        const double c = evaluate(rho, p3).c_lur;
        EXPECT_NEAR(c, 2.0 * ws - 1.0, 1e-12);
        EXPECT_NEAR(c, concurrence(rho), 1e-10);
    }
}

TEST(WernerSweep, Rows) {
    const auto rows = werner_sweep({0.0, 0.5, 1.0});
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_NEAR(rows[0].c_lur_pauli3, -0.5, 1e-12);
    EXPECT_NEAR(rows[0].concurrence, 0.0, 1e-12);
    EXPECT_NEAR(rows[1].c_lur_pauli3, 0.25, 1e-12);
    EXPECT_NEAR(rows[1].c_lur_pauli2, 0.0, 1e-12);
    EXPECT_NEAR(rows[1].concurrence, 0.25, 1e-10);
    EXPECT_NEAR(rows[2].c_lur_pauli3, 1.0, 1e-12);
    EXPECT_THROW(werner_sweep({1.2}), InvalidArgument);
}

TEST(Report, JsonAndCsv) {
    const LURSpec p3 = builtin_spec(BoundKind::pauli3());
    const DensityMatrix rho = werner(WernerParams(0.5));
    LURReport r = evaluate(rho, p3);
    r.input_digest = state_digest(rho);
    EXPECT_EQ(r.input_digest, state_digest(werner(WernerParams(0.5))));
    EXPECT_NE(r.input_digest, state_digest(werner(WernerParams(0.6))));

    const auto doc = report_to_json(r);
    EXPECT_EQ(doc["spec"], "pauli3_lur");
    EXPECT_EQ(doc["verdict"], "Entangled");
    EXPECT_EQ(doc["per_setting_variances"].size(), 3u);
    EXPECT_EQ(doc["per_setting_variances"][0]["label"], "x");
    EXPECT_DOUBLE_EQ(doc["total"].get<double>(), 3.0);
    EXPECT_DOUBLE_EQ(doc["c_lur"].get<double>(), 0.25);
    EXPECT_FALSE(doc.contains("shots"));

    const std::string csv = report_to_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "setting,variance,bound,c_lur,margin,verdict");
    EXPECT_NE(csv.find("total,3,4,0.25,-1,Entangled"), std::string::npos);
    EXPECT_NE(report_to_text(r).find("Entangled"), std::string::npos);
}
