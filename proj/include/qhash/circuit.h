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

#ifndef QHASH_CIRCUIT_H
#define QHASH_CIRCUIT_H

#include <string>
#include <vector>

#include "qhash/statevec.h"

namespace qhash {

enum class GateKind {
    kH,
    kRy,
    kControlledRy,
    kUcr,
};

struct Gate {
    GateKind kind;
    size_t target;
    /// Controlled R_y: the control list. UCR: control order, polarity unused.
    ControlSpec controls;
    /// One angle for R_y / controlled R_y, 2^controls for UCR, none for H.
    std::vector<Angle> angles;

    size_t arity() const {
        return controls.size() + 1;
    }
};

/// A gate list over a fixed register, applied left to right starting from |0...0>.
struct Circuit {
    size_t num_qubits = 0;
    std::vector<Gate> gates;

    Circuit &h(size_t target);
    Circuit &ry(size_t target, Angle theta);
    Circuit &cry(ControlSpec controls, size_t target, Angle theta);
    Circuit &ucr(std::vector<size_t> controls, size_t target, std::vector<Angle> thetas);

    /// Number of gates touching two or more qubits.
    size_t multi_qubit_gate_count() const;
    /// Layer count under greedy as-soon-as-possible scheduling.
    size_t depth() const;

    void apply_to(StateVector &state) const;
    StateVector simulate() const;
};

std::string to_string(GateKind kind);

}  // namespace qhash

#endif
