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

#include "qhash/statevec.h"

#include <algorithm>
#include <bit>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qhash {

Angle::Angle(double r) : radians(r) {
    if (!std::isfinite(r)) {
        throw std::invalid_argument("angle must be finite");
    }
}

Angle Angle::canonical() const {
    constexpr double period = 4 * std::numbers::pi;
    double r = std::fmod(radians, period);
    if (r < 0) {
        r += period;
    }
    if (r >= period) {
        r = 0;
    }
    return Angle(r);
}

StateVector::StateVector(size_t num_qubits, std::vector<double> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
}

StateVector StateVector::zero(size_t num_qubits) {
    return basis(num_qubits, 0);
}

StateVector StateVector::basis(size_t num_qubits, uint64_t index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument(
            "qubit count " + std::to_string(num_qubits) + " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    uint64_t dim = uint64_t{1} << num_qubits;
    if (index >= dim) {
        throw std::out_of_range("basis index " + std::to_string(index) + " >= " + std::to_string(dim));
    }
    std::vector<double> amps(dim, 0.0);
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<double> amplitudes) {
    size_t n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    size_t m = static_cast<size_t>(std::countr_zero(n));
    if (m > kMaxQubits) {
        throw std::invalid_argument("too many qubits");
    }
    return StateVector(m, std::move(amplitudes));
}

double StateVector::norm_squared() const {
    double t = 0;
    for (double a : amplitudes_) {
        t += a * a;
    }
    return t;
}

uint64_t StateVector::bit_of(size_t qubit) const {
    return uint64_t{1} << (num_qubits_ - 1 - qubit);
}

void StateVector::check_qubit(size_t qubit, const char *role) const {
    if (qubit >= num_qubits_) {
        throw std::out_of_range(
            std::string(role) + " qubit " + std::to_string(qubit) + " out of range for " +
            std::to_string(num_qubits_) + "-qubit state");
    }
}

void StateVector::rotate_pair(uint64_t i0, uint64_t i1, double c, double s) {
    double a0 = amplitudes_[i0];
    double a1 = amplitudes_[i1];
    amplitudes_[i0] = c * a0 - s * a1;
    amplitudes_[i1] = s * a0 + c * a1;
}

StateVector &StateVector::apply_h(size_t target) {
    check_qubit(target, "target");
    constexpr double r = std::numbers::sqrt2 / 2;
    uint64_t t = bit_of(target);
    for (uint64_t i = 0; i < amplitudes_.size(); i++) {
        if (i & t) {
            continue;
        }
        double a0 = amplitudes_[i];
        double a1 = amplitudes_[i | t];
        amplitudes_[i] = r * (a0 + a1);
        amplitudes_[i | t] = r * (a0 - a1);
    }
    return *this;
}

StateVector &StateVector::apply_ry(size_t target, Angle theta) {
    return apply_controlled_ry({}, target, theta);
}

StateVector &StateVector::apply_controlled_ry(const ControlSpec &controls, size_t target, Angle theta) {
    check_qubit(target, "target");
    uint64_t mask = 0;
    uint64_t want = 0;
    for (const Control &c : controls) {
        check_qubit(c.qubit, "control");
        if (c.qubit == target) {
            throw std::invalid_argument("control qubit " + std::to_string(c.qubit) + " equals the target");
        }
        uint64_t b = bit_of(c.qubit);
        if (mask & b) {
            throw std::invalid_argument("control qubit " + std::to_string(c.qubit) + " listed twice");
        }
        mask |= b;
        if (c.polarity == Polarity::kOnOne) {
            want |= b;
        }
    }
    double c = std::cos(theta.radians / 2);
    double s = std::sin(theta.radians / 2);
    uint64_t t = bit_of(target);
    for (uint64_t i = 0; i < amplitudes_.size(); i++) {
        if ((i & t) || (i & mask) != want) {
            continue;
        }
        rotate_pair(i, i | t, c, s);
    }
    return *this;
}

StateVector &StateVector::apply_ucr(std::span<const size_t> controls, size_t target, std::span<const Angle> thetas) {
    check_qubit(target, "target");
    if (controls.size() >= 64 || thetas.size() != (uint64_t{1} << controls.size())) {
        throw std::invalid_argument(
            "uniformly controlled rotation with " + std::to_string(controls.size()) + " controls needs " +
            std::to_string(uint64_t{1} << std::min<size_t>(controls.size(), 63)) + " angles, got " +
            std::to_string(thetas.size()));
    }
    uint64_t seen = 0;
    for (size_t q : controls) {
        check_qubit(q, "control");
        if (q == target) {
            throw std::invalid_argument("control qubit " + std::to_string(q) + " equals the target");
        }
        if (seen & bit_of(q)) {
            throw std::invalid_argument("control qubit " + std::to_string(q) + " listed twice");
        }
        seen |= bit_of(q);
    }

    std::vector<double> cs(thetas.size());
    std::vector<double> ss(thetas.size());
    for (size_t j = 0; j < thetas.size(); j++) {
        cs[j] = std::cos(thetas[j].radians / 2);
        ss[j] = std::sin(thetas[j].radians / 2);
    }
    uint64_t t = bit_of(target);
    for (uint64_t i = 0; i < amplitudes_.size(); i++) {
        if (i & t) {
            continue;
        }
        uint64_t j = 0;
        for (size_t q : controls) {
            j = (j << 1) | ((i & bit_of(q)) ? 1 : 0);
        }
        rotate_pair(i, i | t, cs[j], ss[j]);
    }
    return *this;
}

double inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "inner product of " + std::to_string(a.num_qubits()) + "-qubit and " + std::to_string(b.num_qubits()) +
            "-qubit states");
    }
    double t = 0;
    for (size_t i = 0; i < a.size(); i++) {
        t += a[i] * b[i];
    }
    return t;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("state size mismatch");
    }
    double m = 0;
    for (size_t i = 0; i < a.size(); i++) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

namespace {

// Views the amplitudes as a matrix with rows indexed by the qubits in
// row_mask and columns by the rest, and tests whether it is rank one by
// comparing every entry against the outer product through the largest entry.
bool cut_is_rank_one(const StateVector &state, uint64_t row_mask, double tol) {
    uint64_t dim = state.size();
    uint64_t col_mask = (dim - 1) & ~row_mask;
    uint64_t pivot = 0;
    for (uint64_t i = 1; i < dim; i++) {
        if (std::abs(state[i]) > std::abs(state[pivot])) {
            pivot = i;
        }
    }
    double p = state[pivot];
    if (p == 0) {
        return true;
    }
    for (uint64_t i = 0; i < dim; i++) {
        uint64_t same_col = (pivot & row_mask) | (i & col_mask);
        uint64_t same_row = (i & row_mask) | (pivot & col_mask);
        double predicted = state[same_col] * state[same_row] / p;
        if (std::abs(state[i] - predicted) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_product_state(const StateVector &state, double tol) {
    size_t m = state.num_qubits();
    uint64_t all = state.size() - 1;
    for (size_t k = 0; k < m; k++) {
        uint64_t single = uint64_t{1} << (m - 1 - k);
        uint64_t prefix = all & ~((uint64_t{1} << (m - 1 - k)) - 1);
        if (!cut_is_rank_one(state, single, tol) || !cut_is_rank_one(state, prefix, tol)) {
            return false;
        }
    }
    return true;
}

}  // namespace qhash
