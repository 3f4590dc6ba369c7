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

#include "qhash/hashing.h"

#include <algorithm>
#include <bit>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qhash {

namespace {

using u128 = unsigned __int128;

std::vector<uint64_t> reduce_all(uint64_t q, const std::vector<int64_t> &values) {
    if (q < 2 || q > kMaxModulus) {
        throw std::invalid_argument("modulus q=" + std::to_string(q) + " outside [2, 2^58]");
    }
    std::vector<uint64_t> out;
    out.reserve(values.size());
    auto sq = static_cast<int64_t>(q);
    for (int64_t v : values) {
        int64_t r = v % sq;
        out.push_back(static_cast<uint64_t>(r < 0 ? r + sq : r));
    }
    return out;
}

void check_residues(uint64_t q, const std::vector<uint64_t> &values, const char *what) {
    if (q < 2 || q > kMaxModulus) {
        throw std::invalid_argument("modulus q=" + std::to_string(q) + " outside [2, 2^58]");
    }
    for (uint64_t v : values) {
        if (v >= q) {
            throw std::invalid_argument(
                std::string(what) + " element " + std::to_string(v) + " not reduced mod q=" + std::to_string(q));
        }
    }
}

// R_y(4 pi c x / q). R_y has period 4 pi, so c x may be reduced mod q first.
Angle full_turn_angle(uint64_t c, uint64_t x, uint64_t q) {
    auto k = static_cast<uint64_t>(u128{c} * x % q);
    return Angle(4 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q));
}

// R_y(2 pi c x / q). Reducing c x by q would flip the sign of the qubit, so
// reduce mod 2q to keep the state exactly as written.
Angle half_turn_angle(uint64_t c, uint64_t x, uint64_t q) {
    auto k = static_cast<uint64_t>(u128{c} * x % (u128{q} * 2));
    return Angle(2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q));
}

void check_input(uint64_t x, uint64_t q) {
    if (x >= q) {
        throw std::out_of_range("input x=" + std::to_string(x) + " outside Z_q = [0, " + std::to_string(q) + ")");
    }
}

}  // namespace

ParamSet ParamSet::make(uint64_t q, const std::vector<int64_t> &values) {
    ParamSet p{q, reduce_all(q, values)};
    p.validate();
    return p;
}

void ParamSet::validate() const {
    if (s.empty() || s.size() > kMaxParams) {
        throw std::invalid_argument(
            "parameter count n=" + std::to_string(s.size()) + " outside [1, " + std::to_string(kMaxParams) + "]");
    }
    check_residues(q, s, "parameter");
}

bool ParamSet::has_duplicates() const {
    std::vector<uint64_t> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

uint64_t ParamSet::sum() const {
    uint64_t t = 0;
    for (uint64_t v : s) {
        t += v;
    }
    return t;
}

BiasedSet BiasedSet::make(uint64_t q, const std::vector<int64_t> &values) {
    BiasedSet b{q, reduce_all(q, values)};
    b.validate();
    return b;
}

void BiasedSet::validate() const {
    if (b.empty()) {
        throw std::invalid_argument("biased set must be nonempty");
    }
    check_residues(q, b, "set");
}

std::string to_string(HashForm form) {
    switch (form) {
        case HashForm::kStandard:
            return "standard";
        case HashForm::kShallow:
            return "shallow";
        case HashForm::kSingleQubit:
            return "single-qubit";
    }
    return "?";
}

std::optional<HashForm> parse_hash_form(std::string_view text) {
    for (HashForm f : {HashForm::kStandard, HashForm::kShallow, HashForm::kSingleQubit}) {
        if (text == to_string(f)) {
            return f;
        }
    }
    return std::nullopt;
}

uint64_t linear_combination(const ParamSet &params, uint64_t j) {
    size_t n = params.n();
    if (n >= 64 || j >= (uint64_t{1} << n)) {
        throw std::out_of_range("index j=" + std::to_string(j) + " outside [0, 2^" + std::to_string(n) + ")");
    }
    u128 total = 0;
    for (size_t k = 0; k < n; k++) {
        if ((j >> (n - 1 - k)) & 1) {
            total += params.s[k];
        }
    }
    return static_cast<uint64_t>(total % params.q);
}

BiasedSet derive_biased_set(const ParamSet &params) {
    params.validate();
    uint64_t d = uint64_t{1} << params.n();
    BiasedSet out{params.q, {}};
    out.b.reserve(d);
    for (uint64_t j = 0; j < d; j++) {
        out.b.push_back(linear_combination(params, j));
    }
    return out;
}

Circuit standard_hash_circuit(const BiasedSet &set, uint64_t x) {
    set.validate();
    if (!std::has_single_bit(set.d())) {
        throw std::invalid_argument(
            "standard form needs |B| to be a power of two, got " + std::to_string(set.d()));
    }
    auto address = static_cast<size_t>(std::countr_zero(set.d()));
    if (address + 1 > kMaxQubits) {
        throw std::invalid_argument("biased set too large to simulate");
    }
    Circuit c{address + 1, {}};
    std::vector<size_t> controls;
    for (size_t k = 0; k < address; k++) {
        c.h(k);
        controls.push_back(k);
    }
    std::vector<Angle> thetas;
    thetas.reserve(set.d());
    for (uint64_t b : set.b) {
        thetas.push_back(full_turn_angle(b, x, set.q));
    }
    c.ucr(std::move(controls), address, std::move(thetas));
    return c;
}

Circuit shallow_hash_circuit(const ParamSet &params, uint64_t x) {
    params.validate();
    size_t n = params.n();
    Circuit c{n + 1, {}};
    for (size_t k = 0; k < n; k++) {
        c.h(k);
    }
    for (size_t k = 0; k < n; k++) {
        c.cry({Control{k, Polarity::kOnOne}}, n, full_turn_angle(params.s[k], x, params.q));
    }
    return c;
}

Circuit single_qubit_hash_circuit(const ParamSet &params, uint64_t x, bool include_sum_qubit) {
    params.validate();
    size_t n = params.n();
    Circuit c{n + (include_sum_qubit ? 1 : 0), {}};
    for (size_t k = 0; k < n; k++) {
        c.ry(k, half_turn_angle(params.s[k], x, params.q));
    }
    if (include_sum_qubit) {
        c.ry(n, half_turn_angle(params.sum(), x, params.q));
    }
    return c;
}

StateVector build_standard_hash(const BiasedSet &set, uint64_t x) {
    check_input(x, set.q);
    return standard_hash_circuit(set, x).simulate();
}

StateVector build_shallow_hash(const ParamSet &params, uint64_t x) {
    check_input(x, params.q);
    return shallow_hash_circuit(params, x).simulate();
}

StateVector build_single_qubit_hash(const ParamSet &params, uint64_t x, bool include_sum_qubit) {
    check_input(x, params.q);
    return single_qubit_hash_circuit(params, x, include_sum_qubit).simulate();
}

}  // namespace qhash
