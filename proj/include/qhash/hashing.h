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

#ifndef QHASH_HASHING_H
#define QHASH_HASHING_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhash/circuit.h"
#include "qhash/statevec.h"

namespace qhash {

/// Largest modulus accepted anywhere; keeps 2q, sum(S) and all residue products exact.
inline constexpr uint64_t kMaxModulus = uint64_t{1} << 58;
inline constexpr size_t kMaxParams = 20;

/// Parameters s_0..s_{n-1} in Z_q driving the shallow and single-qubit hashes.
struct ParamSet {
    uint64_t q = 0;
    std::vector<uint64_t> s;

    /// Reduces every value mod q, then validates.
    static ParamSet make(uint64_t q, const std::vector<int64_t> &values);

    size_t n() const {
        return s.size();
    }
    /// Throws std::invalid_argument on q < 2, n outside [1, 20], or unreduced entries.
    void validate() const;
    /// Repeated parameters are legal but weaken the hash.
    bool has_duplicates() const;
    /// Sum of the parameters as integers (not reduced mod q).
    uint64_t sum() const;

    friend bool operator==(const ParamSet &, const ParamSet &) = default;
};

/// Elements b_0..b_{d-1} in Z_q of a (candidate) epsilon-biased set.
struct BiasedSet {
    uint64_t q = 0;
    std::vector<uint64_t> b;

    static BiasedSet make(uint64_t q, const std::vector<int64_t> &values);

    size_t d() const {
        return b.size();
    }
    void validate() const;

    friend bool operator==(const BiasedSet &, const BiasedSet &) = default;
};

enum class HashForm {
    kStandard,
    kShallow,
    kSingleQubit,
};

std::string to_string(HashForm form);
std::optional<HashForm> parse_hash_form(std::string_view text);

/// f(S, j) = sum_k j_k s_k mod q, where j_0 is the most significant of j's n bits.
uint64_t linear_combination(const ParamSet &params, uint64_t j);

/// The 2^n-element set b_j = f(S, j), j = 0..2^n-1.
BiasedSet derive_biased_set(const ParamSet &params);

// Circuit descriptions. These accept any x >= 0 (x and x + q give the same
// state up to sign); the build_* wrappers require x in [0, q).

/// H on the log2(d) address qubits, then one UCR with theta_j = 4 pi b_j x / q.
Circuit standard_hash_circuit(const BiasedSet &set, uint64_t x);
/// H on n address qubits, then R_y(4 pi s_k x / q) on qubit n controlled by qubit k.
Circuit shallow_hash_circuit(const ParamSet &params, uint64_t x);
/// One layer of R_y(2 pi s_k x / q); with the sum qubit, an extra R_y(2 pi x sum(S) / q).
Circuit single_qubit_hash_circuit(const ParamSet &params, uint64_t x, bool include_sum_qubit);

StateVector build_standard_hash(const BiasedSet &set, uint64_t x);
StateVector build_shallow_hash(const ParamSet &params, uint64_t x);
StateVector build_single_qubit_hash(const ParamSet &params, uint64_t x, bool include_sum_qubit);

}  // namespace qhash

#endif
