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

#ifndef QHASH_VERIFY_H
#define QHASH_VERIFY_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qhash {

/// Deliberate miscalibrations used to confirm the checks can fail.
enum class Fault {
    kNone,
    /// Shallow circuit built with every rotation angle halved.
    kShallowHalfAngle,
    /// UCR decomposition with the constant rotation dropped.
    kDropGlobalRotation,
};

std::string to_string(Fault fault);
std::optional<Fault> parse_fault(std::string_view text);

struct VerifyOptions {
    /// Moduli 2..q_max are swept.
    uint64_t q_max = 64;
    /// Parameter sets have 1..n_max elements; UCR checks use 1..n_max+1 controls.
    size_t n_max = 5;
    uint64_t seed = 0;
    /// Random parameter sets per modulus, random angle vectors per control count.
    uint64_t trials = 5;
    double tolerance = 1e-10;
    Fault fault = Fault::kNone;

    void validate() const;
};

struct ClaimCheck {
    std::string name;
    std::string claim;
    bool passed = true;
    double max_deviation = 0;
    uint64_t cases = 0;
};

struct VerifyReport {
    std::vector<ClaimCheck> checks;

    bool all_passed() const;
};

/// Cross-checks simulated circuits against the closed-form overlaps:
///   single_qubit_inner    simulated product-state overlap == prod_k cos(pi s_k x / q)
///   ucr_decomposition     UCR(gamma + sum_k j_k gamma_k) == R_y(gamma) then n controlled R_y(gamma_k)
///   shallow_inner         simulated shallow overlap == cos(pi x sum(S) / q) prod_k cos(pi s_k x / q)
///   equal_resistance      shallow and single-qubit-with-sum forms share overlaps and epsilon
VerifyReport run_verification(const VerifyOptions &options);

}  // namespace qhash

#endif
