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

#include "qhash/circuit.h"

#include <algorithm>
#include <stdexcept>

namespace qhash {

Circuit &Circuit::h(size_t target) {
    gates.push_back(Gate{GateKind::kH, target, {}, {}});
    return *this;
}

Circuit &Circuit::ry(size_t target, Angle theta) {
    gates.push_back(Gate{GateKind::kRy, target, {}, {theta}});
    return *this;
}

Circuit &Circuit::cry(ControlSpec controls, size_t target, Angle theta) {
    gates.push_back(Gate{GateKind::kControlledRy, target, std::move(controls), {theta}});
    return *this;
}

Circuit &Circuit::ucr(std::vector<size_t> controls, size_t target, std::vector<Angle> thetas) {
    ControlSpec spec;
    for (size_t q : controls) {
        spec.push_back(Control{q, Polarity::kOnOne});
    }
    gates.push_back(Gate{GateKind::kUcr, target, std::move(spec), std::move(thetas)});
    return *this;
}

size_t Circuit::multi_qubit_gate_count() const {
    return std::count_if(gates.begin(), gates.end(), [](const Gate &g) {
        return g.arity() > 1;
    });
}

size_t Circuit::depth() const {
    std::vector<size_t> level(num_qubits, 0);
    size_t d = 0;
    for (const Gate &g : gates) {
        size_t at = level.at(g.target);
        for (const Control &c : g.controls) {
            at = std::max(at, level.at(c.qubit));
        }
        at++;
        level[g.target] = at;
        for (const Control &c : g.controls) {
            level[c.qubit] = at;
        }
        d = std::max(d, at);
    }
    return d;
}

void Circuit::apply_to(StateVector &state) const {
    if (state.num_qubits() != num_qubits) {
        throw std::invalid_argument("circuit and state register sizes differ");
    }
    for (const Gate &g : gates) {
        switch (g.kind) {
            case GateKind::kH:
                state.apply_h(g.target);
                break;
            case GateKind::kRy:
                state.apply_ry(g.target, g.angles.at(0));
                break;
            case GateKind::kControlledRy:
                state.apply_controlled_ry(g.controls, g.target, g.angles.at(0));
                break;
            case GateKind::kUcr: {
                std::vector<size_t> qs;
                for (const Control &c : g.controls) {
                    qs.push_back(c.qubit);
                }
                state.apply_ucr(qs, g.target, g.angles);
                break;
            }
        }
    }
}

StateVector Circuit::simulate() const {
    StateVector s = StateVector::zero(num_qubits);
    apply_to(s);
    return s;
}

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::kH:
            return "H";
        case GateKind::kRy:
            return "RY";
        case GateKind::kControlledRy:
            return "CRY";
        case GateKind::kUcr:
            return "UCRY";
    }
    return "?";
}

}  // namespace qhash
