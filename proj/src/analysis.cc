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

#include "qhash/analysis.h"

#include <algorithm>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qhash/parallel.h"

namespace qhash {

namespace {

using i128 = __int128;

void check_input(uint64_t x, uint64_t q, const char *name) {
    if (x >= q) {
        throw std::out_of_range(
            std::string(name) + "=" + std::to_string(x) + " outside Z_q = [0, " + std::to_string(q) + ")");
    }
}

void check_sweep(uint64_t q) {
    if (q > kMaxSweepModulus) {
        throw std::invalid_argument(
            "exhaustive sweep needs q <= 2^20, got q=" + std::to_string(q));
    }
}

// cos(pi c x / q) with c x reduced exactly mod 2q (the period in c x).
// Extended precision so products of factors round only once.
long double cos_half_turn(uint64_t c, i128 x, uint64_t q) {
    i128 period = i128{q} * 2;
    i128 k = (i128{c} * x) % period;
    if (k < 0) {
        k += period;
    }
    return std::cos(std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(q));
}

// exp(2 pi i b x / q) with b x reduced mod q.
std::complex<double> character(uint64_t b, i128 x, uint64_t q) {
    i128 k = (i128{b} * x) % i128{q};
    if (k < 0) {
        k += q;
    }
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q));
}

double product_form(const ParamSet &params, i128 x, bool with_sum_factor) {
    long double prod = 1.0L;
    for (uint64_t s : params.s) {
        prod *= cos_half_turn(s, x, params.q);
    }
    if (with_sum_factor) {
        prod = cos_half_turn(params.sum(), x, params.q) * prod;
    }
    return static_cast<double>(prod);
}

template <typename ValueAt>
ResistanceReport sweep(uint64_t q, unsigned threads, ValueAt value_at) {
    check_sweep(q);
    ResistanceReport report;
    report.table.resize(q - 1);
    parallel_for(q - 1, threads, [&](uint64_t begin, uint64_t end) {
        for (uint64_t i = begin; i < end; i++) {
            uint64_t x = i + 1;
            double v = value_at(x);
            report.table[i] = ResistanceEntry{x, v, std::abs(v)};
        }
    });
    report.worst_x = report.table.front().x;
    report.epsilon = report.table.front().magnitude;
    for (const ResistanceEntry &e : report.table) {
        if (e.magnitude > report.epsilon) {
            report.epsilon = e.magnitude;
            report.worst_x = e.x;
        }
    }
    return report;
}

}  // namespace

double bias(const BiasedSet &set, uint64_t x) {
    set.validate();
    check_input(x, set.q, "x");
    std::complex<double> total = 0;
    for (uint64_t b : set.b) {
        total += character(b, x, set.q);
    }
    return std::min(1.0, std::abs(total) / static_cast<double>(set.d()));
}

BiasedSet shift_normalize(const BiasedSet &set) {
    set.validate();
    BiasedSet out{set.q, {}};
    out.b.reserve(set.d());
    uint64_t b0 = set.b.front();
    for (uint64_t b : set.b) {
        out.b.push_back(b >= b0 ? b - b0 : b + (set.q - b0));
    }
    return out;
}

ResistanceReport epsilon_of_biased_set(const BiasedSet &set, unsigned threads) {
    set.validate();
    return sweep(set.q, threads, [&](uint64_t x) {
        return bias(set, x);
    });
}

double closed_inner_single(const ParamSet &params, uint64_t x1, uint64_t x2, bool include_sum_qubit) {
    params.validate();
    check_input(x1, params.q, "x1");
    check_input(x2, params.q, "x2");
    return product_form(params, i128{x1} - i128{x2}, include_sum_qubit);
}

double closed_inner_shallow(const ParamSet &params, uint64_t x1, uint64_t x2) {
    params.validate();
    check_input(x1, params.q, "x1");
    check_input(x2, params.q, "x2");
    return product_form(params, i128{x1} - i128{x2}, true);
}

double closed_inner_standard(const BiasedSet &set, uint64_t x1, uint64_t x2) {
    set.validate();
    check_input(x1, set.q, "x1");
    check_input(x2, set.q, "x2");
    double total = 0;
    for (uint64_t b : set.b) {
        total += character(b, i128{x1} - i128{x2}, set.q).real();
    }
    return total / static_cast<double>(set.d());
}

double simulated_inner(HashForm form, const HashInput &input, uint64_t x1, uint64_t x2, bool include_sum_qubit) {
    if (form == HashForm::kStandard) {
        BiasedSet set = std::holds_alternative<BiasedSet>(input) ? std::get<BiasedSet>(input)
                                                                 : derive_biased_set(std::get<ParamSet>(input));
        return inner_product(build_standard_hash(set, x1), build_standard_hash(set, x2));
    }
    if (!std::holds_alternative<ParamSet>(input)) {
        throw std::invalid_argument(to_string(form) + " form is built from a parameter set, not a biased set");
    }
    const auto &params = std::get<ParamSet>(input);
    if (form == HashForm::kShallow) {
        return inner_product(build_shallow_hash(params, x1), build_shallow_hash(params, x2));
    }
    return inner_product(
        build_single_qubit_hash(params, x1, include_sum_qubit), build_single_qubit_hash(params, x2, include_sum_qubit));
}

ResistanceReport collision_resistance(const ParamSet &params, HashForm form, bool include_sum_qubit, unsigned threads) {
    params.validate();
    bool with_sum = form != HashForm::kSingleQubit || include_sum_qubit;
    return sweep(params.q, threads, [&](uint64_t x) {
        return product_form(params, x, with_sum);
    });
}

ResistanceSummary resistance_summary(const ParamSet &params, HashForm form, bool include_sum_qubit) {
    params.validate();
    check_sweep(params.q);
    bool with_sum = form != HashForm::kSingleQubit || include_sum_qubit;
    ResistanceSummary out{-1.0, 0};
    for (uint64_t x = 1; x < params.q; x++) {
        double m = std::abs(product_form(params, x, with_sum));
        if (m > out.epsilon) {
            out = ResistanceSummary{m, x};
        }
    }
    return out;
}

CosineSumCheck cosine_sum_check(const BiasedSet &set, uint64_t x) {
    set.validate();
    check_input(x, set.q, "x");
    if (x == 0) {
        throw std::invalid_argument("cosine-sum bound is stated for x != 0");
    }
    std::complex<double> total = 0;
    for (uint64_t b : set.b) {
        total += character(b, x, set.q);
    }
    auto d = static_cast<double>(set.d());
    return CosineSumCheck{std::abs(total.real()) / d, std::abs(total) / d};
}

double equality_test_prob(const StateVector &a, const StateVector &b) {
    double overlap = inner_product(a, b);
    return std::clamp((1 + overlap * overlap) / 2, 0.5, 1.0);
}

}  // namespace qhash
