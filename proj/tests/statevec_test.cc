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

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qhash/circuit.h"

using namespace qhash;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRoot2Over2 = 0.7071067811865476;

void expect_amplitudes(const StateVector &s, std::vector<double> expected, double tol = 1e-12) {
    ASSERT_EQ(s.size(), expected.size());
    for (size_t i = 0; i < expected.size(); i++) {
        EXPECT_NEAR(s[i], expected[i], tol) << "index " << i;
    }
}

void expect_matches(const StateVector &s, const std::vector<long double> &expected, double tol) {
    ASSERT_EQ(s.size(), expected.size());
    for (size_t i = 0; i < expected.size(); i++) {
        EXPECT_NEAR(s[i], static_cast<double>(expected[i]), tol) << "index " << i;
    }
}

StateVector random_state(std::mt19937_64 &rng, size_t m) {
    std::normal_distribution<double> g;
    std::vector<double> a(size_t{1} << m);
    double norm = 0;
    for (double &v : a) {
        v = g(rng);
        norm += v * v;
    }
    for (double &v : a) {
        v /= std::sqrt(norm);
    }
    return StateVector::from_amplitudes(a);
}

}  // namespace

TEST(statevec, zero_state) {
    expect_amplitudes(StateVector::zero(1), {1, 0});
    expect_amplitudes(StateVector::zero(2), {1, 0, 0, 0});
    EXPECT_EQ(StateVector::zero(24).size(), size_t{1} << 24);
    EXPECT_THROW(StateVector::zero(25), std::invalid_argument);
    EXPECT_THROW(StateVector::zero(0), std::invalid_argument);
}

TEST(statevec, basis_index_has_qubit_zero_as_msb) {
    // |10> on two qubits: qubit 0 set.
    StateVector s = StateVector::basis(2, 0b10);
    expect_amplitudes(s, {0, 0, 1, 0});
    EXPECT_THROW(StateVector::basis(2, 4), std::out_of_range);
}

TEST(statevec, ry) {
    expect_amplitudes(StateVector::zero(1).apply_ry(0, Angle(0)), {1, 0});
    expect_amplitudes(StateVector::zero(1).apply_ry(0, Angle(kPi)), {0, 1});
    expect_amplitudes(StateVector::zero(1).apply_ry(0, Angle(kPi / 2)), {kRoot2Over2, kRoot2Over2});
    EXPECT_THROW(StateVector::zero(1).apply_ry(1, Angle(1)), std::out_of_range);
}

TEST(statevec, hadamard) {
    expect_amplitudes(StateVector::zero(1).apply_h(0), {kRoot2Over2, kRoot2Over2});
    expect_amplitudes(StateVector::basis(1, 1).apply_h(0), {kRoot2Over2, -kRoot2Over2});
    expect_amplitudes(StateVector::zero(1).apply_h(0).apply_h(0), {1, 0});
    EXPECT_THROW(StateVector::zero(2).apply_h(2), std::out_of_range);
}

TEST(statevec, single_qubit_gates_match_dense_matrices) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-10, 10);
    for (size_t m = 1; m <= 4; m++) {
        for (size_t target = 0; target < m; target++) {
            StateVector s = random_state(rng, m);
            std::vector<long double> v(s.amplitudes().begin(), s.amplitudes().end());
            double theta = angle(rng);
            expect_matches(StateVector(s).apply_ry(target, Angle(theta)), oracle::apply(oracle::embed(oracle::ry(theta), target, m), v), 1e-13);
            expect_matches(StateVector(s).apply_h(target), oracle::apply(oracle::embed(oracle::hadamard(), target, m), v), 1e-13);
        }
    }
}

TEST(statevec, controlled_ry) {
    ControlSpec on_one{{0, Polarity::kOnOne}};
    ControlSpec on_zero{{0, Polarity::kOnZero}};
    expect_amplitudes(StateVector::basis(2, 0b10).apply_controlled_ry(on_one, 1, Angle(kPi)), {0, 0, 0, 1});
    expect_amplitudes(StateVector::basis(2, 0b00).apply_controlled_ry(on_one, 1, Angle(kPi)), {1, 0, 0, 0});
    expect_amplitudes(StateVector::basis(2, 0b00).apply_controlled_ry(on_zero, 1, Angle(kPi)), {0, 1, 0, 0});
}

TEST(statevec, controlled_ry_rejects_bad_controls) {
    StateVector s = StateVector::zero(3);
    EXPECT_THROW(s.apply_controlled_ry({{1, Polarity::kOnOne}}, 1, Angle(1)), std::invalid_argument);
    EXPECT_THROW(s.apply_controlled_ry({{0, Polarity::kOnOne}, {0, Polarity::kOnZero}}, 2, Angle(1)), std::invalid_argument);
    EXPECT_THROW(s.apply_controlled_ry({{3, Polarity::kOnOne}}, 2, Angle(1)), std::out_of_range);
}

TEST(statevec, ucr_selects_angle_by_control_value) {
    std::vector<size_t> controls{0};
    std::vector<Angle> thetas{Angle(0), Angle(kPi)};
    expect_amplitudes(StateVector::basis(2, 0b10).apply_ucr(controls, 1, thetas), {0, 0, 0, 1});
    expect_amplitudes(StateVector::basis(2, 0b00).apply_ucr(controls, 1, thetas), {1, 0, 0, 0});
}

TEST(statevec, ucr_rejects_wrong_angle_count) {
    std::vector<size_t> controls{0, 1};
    std::vector<Angle> thetas(3);
    EXPECT_THROW(StateVector::zero(3).apply_ucr(controls, 2, thetas), std::invalid_argument);
    std::vector<size_t> overlapping{0, 2};
    std::vector<Angle> four(4);
    EXPECT_THROW(StateVector::zero(3).apply_ucr(overlapping, 2, four), std::invalid_argument);
}

TEST(statevec, ucr_equals_polarity_pattern_composition) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-4 * kPi, 4 * kPi);
    for (size_t n = 1; n <= 4; n++) {
        for (int rep = 0; rep < 10; rep++) {
            std::vector<Angle> thetas(size_t{1} << n);
            for (Angle &a : thetas) {
                a = Angle(angle(rng));
            }
            std::vector<size_t> controls;
            for (size_t k = 0; k < n; k++) {
                controls.push_back(k);
            }
            StateVector start = random_state(rng, n + 1);
            StateVector by_ucr = start;
            by_ucr.apply_ucr(controls, n, thetas);
            StateVector by_gates = start;
            for (uint64_t j = 0; j < thetas.size(); j++) {
                ControlSpec spec;
                for (size_t k = 0; k < n; k++) {
                    bool one = (j >> (n - 1 - k)) & 1;
                    spec.push_back({k, one ? Polarity::kOnOne : Polarity::kOnZero});
                }
                by_gates.apply_controlled_ry(spec, n, thetas[j]);
            }
            EXPECT_LE(max_abs_diff(by_ucr, by_gates), 1e-12);
        }
    }
}

TEST(statevec, ucr_with_linear_angles_equals_shallow_chain) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> angle(-4 * kPi, 4 * kPi);
    for (size_t n = 1; n <= 6; n++) {
        double gamma = angle(rng);
        std::vector<double> gammas(n);
        for (double &g : gammas) {
            g = angle(rng);
        }
        std::vector<Angle> thetas;
        for (uint64_t j = 0; j < (uint64_t{1} << n); j++) {
            double t = gamma;
            for (size_t k = 0; k < n; k++) {
                if ((j >> (n - 1 - k)) & 1) {
                    t += gammas[k];
                }
            }
            thetas.push_back(Angle(t));
        }
        std::vector<size_t> controls;
        for (size_t k = 0; k < n; k++) {
            controls.push_back(k);
        }
        for (uint64_t input = 0; input < (uint64_t{2} << n); input++) {
            StateVector a = StateVector::basis(n + 1, input);
            a.apply_ucr(controls, n, thetas);
            StateVector b = StateVector::basis(n + 1, input);
            b.apply_ry(n, Angle(gamma));
            for (size_t k = 0; k < n; k++) {
                b.apply_controlled_ry({{k, Polarity::kOnOne}}, n, Angle(gammas[k]));
            }
            EXPECT_LE(max_abs_diff(a, b), 1e-10) << "n=" << n << " input=" << input;
        }
    }
}

TEST(statevec, inner_product) {
    EXPECT_DOUBLE_EQ(inner_product(StateVector::zero(1), StateVector::zero(1)), 1);
    EXPECT_DOUBLE_EQ(inner_product(StateVector::zero(1), StateVector::basis(1, 1)), 0);
    EXPECT_NEAR(inner_product(StateVector::zero(1).apply_ry(0, Angle(kPi / 2)), StateVector::zero(1)), kRoot2Over2, 1e-15);
    EXPECT_THROW(inner_product(StateVector::zero(1), StateVector::zero(2)), std::invalid_argument);
}

TEST(statevec, norm_preserved_under_random_gate_sequences) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-20, 20);
    for (int rep = 0; rep < 50; rep++) {
        size_t m = 1 + rng() % 6;
        StateVector s = StateVector::zero(m);
        for (int g = 0; g < 40; g++) {
            size_t target = rng() % m;
            switch (rng() % 3) {
                case 0:
                    s.apply_h(target);
                    break;
                case 1:
                    s.apply_ry(target, Angle(angle(rng)));
                    break;
                default:
                    if (m > 1) {
                        size_t c = (target + 1 + rng() % (m - 1)) % m;
                        s.apply_controlled_ry({{c, rng() % 2 ? Polarity::kOnOne : Polarity::kOnZero}}, target, Angle(angle(rng)));
                    }
            }
        }
        EXPECT_NEAR(s.norm_squared(), 1, 1e-12);
    }
}

TEST(statevec, ry_is_additive) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> angle(-20, 20);
    for (int rep = 0; rep < 50; rep++) {
        StateVector s = random_state(rng, 3);
        size_t t = rng() % 3;
        double a = angle(rng), b = angle(rng);
        StateVector twice = s;
        twice.apply_ry(t, Angle(a)).apply_ry(t, Angle(b));
        StateVector once = s;
        once.apply_ry(t, Angle(a) + Angle(b));
        EXPECT_LE(max_abs_diff(twice, once), 1e-12);
    }
}

TEST(statevec, angle_canonicalization_keeps_rotation) {
    for (double r : {-13.0, -0.5, 0.0, 3.0, 4 * kPi, 40.0}) {
        Angle c = Angle(r).canonical();
        EXPECT_GE(c.radians, 0);
        EXPECT_LT(c.radians, 4 * kPi);
        EXPECT_LE(max_abs_diff(StateVector::zero(1).apply_ry(0, Angle(r)), StateVector::zero(1).apply_ry(0, c)), 1e-12);
    }
    EXPECT_THROW(Angle(std::nan("")), std::invalid_argument);
}

TEST(statevec, product_state_detection) {
    StateVector product = StateVector::zero(3).apply_ry(0, Angle(0.3)).apply_ry(1, Angle(1.1)).apply_ry(2, Angle(2.5));
    EXPECT_TRUE(is_product_state(product, 1e-10));
    StateVector bell = StateVector::zero(2).apply_h(0).apply_controlled_ry({{0, Polarity::kOnOne}}, 1, Angle(kPi));
    EXPECT_FALSE(is_product_state(bell, 1e-10));
    // Entangled across the middle cut only.
    StateVector middle = StateVector::zero(4).apply_h(1).apply_controlled_ry({{1, Polarity::kOnOne}}, 2, Angle(kPi));
    EXPECT_FALSE(is_product_state(middle, 1e-10));
}

TEST(circuit, depth_and_multi_qubit_count) {
    Circuit c{3, {}};
    c.ry(0, Angle(1)).ry(1, Angle(1)).ry(2, Angle(1));
    EXPECT_EQ(c.depth(), 1u);
    EXPECT_EQ(c.multi_qubit_gate_count(), 0u);
    c.cry({{0, Polarity::kOnOne}}, 2, Angle(1)).cry({{1, Polarity::kOnOne}}, 2, Angle(1));
    EXPECT_EQ(c.depth(), 3u);
    EXPECT_EQ(c.multi_qubit_gate_count(), 2u);
}
