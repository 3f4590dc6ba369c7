// Copyright 2026 The qhash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QHASH_ANALYSIS_H
#define QHASH_ANALYSIS_H

#include <cstdint>
#include <variant>
#include <vector>

#include "qhash/hashing.h"
#include "qhash/statevec.h"

namespace qhash {

/// Exhaustive sweeps over x refuse moduli above this.
inline constexpr uint64_t kMaxSweepModulus = uint64_t{1} << 20;

struct ResistanceEntry {
    uint64_t x;
    /// Signed inner product (or bias, which is already nonnegative).
    double value;
    double magnitude;

    friend bool operator==(const ResistanceEntry &, const ResistanceEntry &) = default;
};

/// Worst case over all nonzero x of |<psi(x1)|psi(x2)>| (x = x1 - x2) or of bias(B, x).
struct ResistanceReport {
    double epsilon = 0;
    uint64_t worst_x = 0;
    /// One entry per x = 1..q-1, in order.
    std::vector<ResistanceEntry> table;

    friend bool operator==(const ResistanceReport &, const ResistanceReport &) = default;
};

/// (1/|B|) |sum_b exp(2 pi i b x / q)|.
double bias(const BiasedSet &set, uint64_t x);

/// Shifts every element by -b_0 mod q so the set starts at 0. Bias is unchanged.
BiasedSet shift_normalize(const BiasedSet &set);

/// max_{x != 0} bias(B, x), smallest x on ties. Throws when q > kMaxSweepModulus.
ResistanceReport epsilon_of_biased_set(const BiasedSet &set, unsigned threads = 0);

/// prod_k cos(pi s_k (x1 - x2) / q), times cos(pi (x1 - x2) sum(S) / q) with the sum qubit.
double closed_inner_single(const ParamSet &params, uint64_t x1, uint64_t x2, bool include_sum_qubit);

/// cos(pi (x1 - x2) sum(S) / q) prod_k cos(pi s_k (x1 - x2) / q).
///
/// Evaluated by the same routine as closed_inner_single with the sum qubit, so
/// the two agree bit for bit.
double closed_inner_shallow(const ParamSet &params, uint64_t x1, uint64_t x2);

/// (1/d) sum_j cos(2 pi b_j (x1 - x2) / q), the overlap of two standard-form hashes.
double closed_inner_standard(const BiasedSet &set, uint64_t x1, uint64_t x2);

using HashInput = std::variant<ParamSet, BiasedSet>;

/// Builds both hash states and returns their simulated inner product.
/// kStandard accepts either input (a ParamSet is expanded with derive_biased_set);
/// the other forms need a ParamSet. include_sum_qubit only affects kSingleQubit.
double simulated_inner(
    HashForm form, const HashInput &input, uint64_t x1, uint64_t x2, bool include_sum_qubit = false);

/// Epsilon of the hash family under the closed-form inner product.
/// kStandard and kShallow share the same closed form.
ResistanceReport collision_resistance(
    const ParamSet &params, HashForm form, bool include_sum_qubit = false, unsigned threads = 0);

struct ResistanceSummary {
    double epsilon;
    uint64_t worst_x;
};

/// Single-threaded epsilon and worst x without the table; same values as collision_resistance.
ResistanceSummary resistance_summary(const ParamSet &params, HashForm form, bool include_sum_qubit = false);

struct CosineSumCheck {
    /// (1/d) |sum_j cos(2 pi b_j x / q)|
    double cosine_magnitude;
    /// (1/d) |sum_j exp(2 pi i b_j x / q)|, i.e. bias(B, x)
    double complex_magnitude;
};

/// Both sides of the real-part bound; x must be nonzero.
CosineSumCheck cosine_sum_check(const BiasedSet &set, uint64_t x);

/// SWAP-test acceptance probability (1 + <a|b>^2) / 2.
double equality_test_prob(const StateVector &a, const StateVector &b);

}  // namespace qhash

#endif
