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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "entlur/linalg.hpp"
#include "entlur/operators.hpp"
#include "entlur/uncertainty.hpp"

namespace entlur {

/// a (x) 1_{N_B} + 1_{N_A} (x) b. Subsystem dimensions may differ.
ComplexMatrix joint_operator(const ComplexMatrix &a, const ComplexMatrix &b,
                             const Tolerances &tol = default_tolerances());

/// Paired observable sets {A_i}, {B_i} and the separable-state bound
/// U_A + U_B. Setting i measures A_i on side A and B_i on side B; its label
/// is the name of A_i.
class LURSpec {
  public:
    /// Throws InvalidArgument when the sets differ in size or the bound is
    /// not positive.
    LURSpec(std::string label, ObservableSet obs_a, ObservableSet obs_b, UncertaintyBound bound_a,
            UncertaintyBound bound_b);

    const std::string &label() const noexcept { return label_; }
    const ObservableSet &obs_a() const noexcept { return obs_a_; }
    const ObservableSet &obs_b() const noexcept { return obs_b_; }
    const UncertaintyBound &bound_a() const noexcept { return bound_a_; }
    const UncertaintyBound &bound_b() const noexcept { return bound_b_; }
    double bound() const noexcept { return bound_a_.value + bound_b_.value; }

    std::size_t settings() const noexcept { return obs_a_.size(); }
    const std::string &setting_label(std::size_t i) const { return obs_a_.names()[i]; }
    std::size_t dim_a() const noexcept { return obs_a_.dim(); }
    std::size_t dim_b() const noexcept { return obs_b_.dim(); }
    /// A_i + B_i on the joint space.
    const ComplexMatrix &joint(std::size_t i) const { return joints_[i]; }
    const ObservableSet &joint_set() const noexcept { return joint_set_; }

  private:
    std::string label_;
    ObservableSet obs_a_;
    ObservableSet obs_b_;
    UncertaintyBound bound_a_;
    UncertaintyBound bound_b_;
    std::vector<ComplexMatrix> joints_;
    ObservableSet joint_set_;
};

/// The LUR built from one analytic sum-uncertainty family on both sides:
/// spin3(l) -> bound 2l, spin1_xy -> 7/8, pauli3 -> 4, pauli2 -> 2.
/// Labels are "<family>_lur".
LURSpec builtin_spec(const BoundKind &kind);

/// Accepts the family names with or without the "_lur" suffix.
LURSpec builtin_spec(const std::string &name, double l = 1.0);

/// LUR maximally violated by sum_n |n,n>: B_i = partner_operator(A_i),
/// bounds certified numerically on each side.
LURSpec max_entangled_spec(const ObservableSet &obs_a, const OptimizerOptions &options = {});

enum class Verdict { Entangled, Inconclusive };
const char *to_string(Verdict v);

struct LURReport {
    std::string spec_label;
    std::vector<std::string> setting_labels;
    RealVector per_setting_variances;
    double total = 0.0;
    double bound = 0.0;
    /// 1 - total / bound
    double c_lur = 0.0;
    /// total - bound; negative means violation.
    double margin = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    /// Total shot count when built from count data.
    std::optional<std::uint64_t> shots;
    std::string input_digest;
};

/// Fills total, c_lur, margin and verdict (Entangled iff total < bound - judge).
LURReport make_report(const LURSpec &spec, RealVector per_setting_variances,
                      const Tolerances &tol = default_tolerances());

/// Variances of every A_i + B_i on rho. Throws DimMismatch.
LURReport evaluate(const DensityMatrix &rho, const LURSpec &spec,
                   const Tolerances &tol = default_tolerances());

struct ProductMinimum {
    double value = 0.0;
    ComplexVector alpha;
    ComplexVector beta;
    std::size_t rounds = 0;
};

/// Minimum of the LUR total over pure product states |alpha> (x) |beta>.
/// Multi-start alternating optimization: minimize over alpha with beta held,
/// then over beta with alpha held, until the total stops changing. The value
/// returned is evaluated on the product state itself.
ProductMinimum min_over_product_states(const LURSpec &spec, const OptimizerOptions &options = {});

struct WernerRow {
    double p_s;
    double c_lur_pauli3;
    double c_lur_pauli2;
    double concurrence;
};

/// Each row evaluates the Werner state directly; no closed forms are used.
std::vector<WernerRow> werner_sweep(const RealVector &grid);

/// Digest of the canonical JSON of a state, used to tag reports.
std::string state_digest(const DensityMatrix &rho);

nlohmann::ordered_json report_to_json(const LURReport &report);
/// One row per setting plus a totals row.
std::string report_to_csv(const LURReport &report);
std::string report_to_text(const LURReport &report);

} // namespace entlur
