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

#ifndef QHASH_STATEVEC_H
#define QHASH_STATEVEC_H

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qhash {

/// Largest register the simulator will allocate (2^24 doubles = 128 MiB).
inline constexpr size_t kMaxQubits = 24;

/// Rotation angle in radians. R_y has period 4*pi.
struct Angle {
    double radians = 0.0;

    constexpr Angle() = default;
    explicit Angle(double r);

    /// Same rotation, with the value folded into [0, 4*pi).
    Angle canonical() const;

    friend Angle operator+(Angle a, Angle b) {
        return Angle(a.radians + b.radians);
    }
    friend bool operator==(Angle, Angle) = default;
};

enum class Polarity : uint8_t {
    kOnOne,   // filled dot
    kOnZero,  // open dot
};

struct Control {
    size_t qubit;
    Polarity polarity = Polarity::kOnOne;

    friend bool operator==(const Control &, const Control &) = default;
};

using ControlSpec = std::vector<Control>;

/// Real-amplitude state of an m-qubit register.
///
/// Basis index convention: qubit 0 is the most significant bit, so the
/// amplitude of |q_0 q_1 ... q_{m-1}> lives at index sum_k q_k 2^{m-1-k}.
/// Every gate the hash circuits use (H, R_y, controlled R_y) is a real
/// orthogonal matrix, so amplitudes never leave the reals.
///
/// Gate methods mutate in place and return *this so calls can be chained.
class StateVector {
   public:
    /// |0...0> on m qubits. Throws std::invalid_argument unless 1 <= m <= kMaxQubits.
    static StateVector zero(size_t num_qubits);
    /// Computational basis state |index>.
    static StateVector basis(size_t num_qubits, uint64_t index);
    /// Wraps raw amplitudes; length must be a power of two >= 2.
    static StateVector from_amplitudes(std::vector<double> amplitudes);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t size() const {
        return amplitudes_.size();
    }
    std::span<const double> amplitudes() const {
        return amplitudes_;
    }
    double operator[](size_t index) const {
        return amplitudes_[index];
    }
    double norm_squared() const;

    StateVector &apply_h(size_t target);
    StateVector &apply_ry(size_t target, Angle theta);
    StateVector &apply_controlled_ry(const ControlSpec &controls, size_t target, Angle theta);

    /// Uniformly controlled rotation: on the subspace where the control
    /// register (controls[0] most significant) holds j, applies R_y(thetas[j])
    /// to the target. thetas.size() must be 2^controls.size().
    StateVector &apply_ucr(std::span<const size_t> controls, size_t target, std::span<const Angle> thetas);

    friend bool operator==(const StateVector &, const StateVector &) = default;

   private:
    StateVector(size_t num_qubits, std::vector<double> amplitudes);

    uint64_t bit_of(size_t qubit) const;
    void check_qubit(size_t qubit, const char *role) const;
    void rotate_pair(uint64_t index0, uint64_t index1, double c, double s);

    size_t num_qubits_;
    std::vector<double> amplitudes_;
};

/// <a|b>; amplitudes are real so the result is real.
double inner_product(const StateVector &a, const StateVector &b);

/// Largest component-wise |a_i - b_i|.
double max_abs_diff(const StateVector &a, const StateVector &b);

/// True when every qubit cut of the state has Schmidt rank 1 within tol,
/// i.e. the state is a product of single-qubit states.
bool is_product_state(const StateVector &state, double tol);

}  // namespace qhash

#endif
