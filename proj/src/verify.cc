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

#include "qhash/verify.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qhash/analysis.h"
#include "qhash/circuit.h"
#include "qhash/hashing.h"

namespace qhash {

namespace {

constexpr uint64_t kMaxVerifyModulus = 1024;
constexpr size_t kMaxVerifyParams = 10;

ParamSet random_params(std::mt19937_64 &rng, uint64_t q, size_t n_max) {
    size_t n = std::uniform_int_distribution<size_t>(1, n_max)(rng);
    std::uniform_int_distribution<uint64_t> value(0, q - 1);
    ParamSet p{q, std::vector<uint64_t>(n)};
    for (uint64_t &s : p.s) {
        s = value(rng);
    }
    return p;
}

StateVector shallow_state(const ParamSet &params, uint64_t x, Fault fault) {
    Circuit c = shallow_hash_circuit(params, x);
    if (fault == Fault::kShallowHalfAngle) {
        for (Gate &g : c.gates) {
            for (Angle &a : g.angles) {
                a = Angle(a.radians / 2);
            }
        }
    }
    return c.simulate();
}

void record(ClaimCheck &check, double deviation, double tolerance) {
    check.cases++;
    check.max_deviation = std::max(check.max_deviation, deviation);
    if (!(deviation <= tolerance)) {
        check.passed = false;
    }
}

void check_ucr(const VerifyOptions &opt, std::mt19937_64 &rng, ClaimCheck &check) {
    std::uniform_real_distribution<double> angle(-4 * std::numbers::pi, 4 * std::numbers::pi);
    for (size_t n = 1; n <= opt.n_max + 1; n++) {
        for (uint64_t t = 0; t < opt.trials; t++) {
            Angle gamma(angle(rng));
            std::vector<Angle> gammas(n);
            for (Angle &g : gammas) {
                g = Angle(angle(rng));
            }
            std::vector<Angle> thetas(uint64_t{1} << n);
            for (uint64_t j = 0; j < thetas.size(); j++) {
                double theta = gamma.radians;
                for (size_t k = 0; k < n; k++) {
                    if ((j >> (n - 1 - k)) & 1) {
                        theta += gammas[k].radians;
                    }
                }
                thetas[j] = Angle(theta);
            }
            std::vector<size_t> controls(n);
            for (size_t k = 0; k < n; k++) {
                controls[k] = k;
            }
            for (uint64_t input = 0; input < (uint64_t{2} << n); input++) {
                StateVector multiplexed = StateVector::basis(n + 1, input);
                multiplexed.apply_ucr(controls, n, thetas);
                StateVector shallow = StateVector::basis(n + 1, input);
                if (opt.fault != Fault::kDropGlobalRotation) {
                    shallow.apply_ry(n, gamma);
                }
                for (size_t k = 0; k < n; k++) {
                    shallow.apply_controlled_ry({Control{k, Polarity::kOnOne}}, n, gammas[k]);
                }
                record(check, max_abs_diff(multiplexed, shallow), opt.tolerance);
            }
        }
    }
}

}  // namespace

std::string to_string(Fault fault) {
    switch (fault) {
        case Fault::kNone:
            return "none";
        case Fault::kShallowHalfAngle:
            return "shallow-half-angle";
        case Fault::kDropGlobalRotation:
            return "drop-global-rotation";
    }
    return "?";
}

std::optional<Fault> parse_fault(std::string_view text) {
    for (Fault f : {Fault::kNone, Fault::kShallowHalfAngle, Fault::kDropGlobalRotation}) {
        if (text == to_string(f)) {
            return f;
        }
    }
    return std::nullopt;
}

void VerifyOptions::validate() const {
    if (q_max < 2 || q_max > kMaxVerifyModulus) {
        throw std::invalid_argument("q-max must lie in [2, 1024]");
    }
    if (n_max < 1 || n_max > kMaxVerifyParams) {
        throw std::invalid_argument("n-max must lie in [1, 10]");
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be positive");
    }
}

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck &c) {
        return c.passed;
    });
}

VerifyReport run_verification(const VerifyOptions &opt) {
    opt.validate();
    ClaimCheck single{"single_qubit_inner", "simulated single-qubit overlap equals prod_k cos(pi s_k x/q)"};
    ClaimCheck ucr{"ucr_decomposition", "UCR with theta_j = gamma + sum_k j_k gamma_k equals the controlled-R_y chain"};
    ClaimCheck shallow{"shallow_inner", "simulated shallow overlap equals cos(pi x sum(S)/q) prod_k cos(pi s_k x/q)"};
    ClaimCheck equal{"equal_resistance", "shallow and single-qubit-with-sum forms have the same collision resistance"};

    std::mt19937_64 rng(opt.seed);
    check_ucr(opt, rng, ucr);

    for (uint64_t q = 2; q <= opt.q_max; q++) {
        for (uint64_t t = 0; t < opt.trials; t++) {
            ParamSet params = random_params(rng, q, opt.n_max);
            std::vector<StateVector> plain, with_sum, shallow_states;
            for (uint64_t x = 0; x < q; x++) {
                plain.push_back(build_single_qubit_hash(params, x, false));
                with_sum.push_back(build_single_qubit_hash(params, x, true));
                shallow_states.push_back(shallow_state(params, x, opt.fault));
            }
            for (uint64_t x1 = 0; x1 < q; x1++) {
                for (uint64_t x2 = 0; x2 < q; x2++) {
                    double closed_single = closed_inner_single(params, x1, x2, false);
                    record(single, std::abs(inner_product(plain[x1], plain[x2]) - closed_single), opt.tolerance);

                    double closed_shallow = closed_inner_shallow(params, x1, x2);
                    double sim_shallow = inner_product(shallow_states[x1], shallow_states[x2]);
                    record(shallow, std::abs(sim_shallow - closed_shallow), opt.tolerance);

                    double closed_sum = closed_inner_single(params, x1, x2, true);
                    double sim_sum = inner_product(with_sum[x1], with_sum[x2]);
                    // The two closed forms must be the same number, not merely close.
                    record(equal, closed_sum == closed_shallow ? 0.0 : std::abs(closed_sum - closed_shallow), 0.0);
                    record(equal, std::abs(std::abs(sim_sum) - std::abs(sim_shallow)), opt.tolerance);
                }
            }
            ResistanceReport a = collision_resistance(params, HashForm::kShallow, false, 1);
            ResistanceReport b = collision_resistance(params, HashForm::kSingleQubit, true, 1);
            bool same = a.epsilon == b.epsilon && a.worst_x == b.worst_x;
            record(equal, same ? 0.0 : std::max(std::abs(a.epsilon - b.epsilon), 1.0), 0.0);
        }
    }
    return VerifyReport{{single, ucr, shallow, equal}};
}

}  // namespace qhash
