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

#include "qhash/search.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qhash/parallel.h"

namespace qhash {

namespace {

// Trials are evaluated in fixed-size blocks so early stopping lands on the
// same trial no matter how many threads share a block.
constexpr uint64_t kBlock = 256;

struct Scored {
    uint64_t index;
    double epsilon;
};

void check_search_shape(uint64_t q, size_t n) {
    if (q < 2 || q > kMaxSweepModulus) {
        throw std::invalid_argument("search needs 2 <= q <= 2^20 for certification, got q=" + std::to_string(q));
    }
    if (n < 1 || n > kMaxParams) {
        throw std::invalid_argument("set size n=" + std::to_string(n) + " outside [1, 20]");
    }
}

SearchResult certify(ParamSet best, double epsilon, uint64_t worst_x, uint64_t trials_run,
                     std::vector<SearchStep> history, HashForm form, bool include_sum_qubit, unsigned threads) {
    ResistanceReport report = collision_resistance(best, form, include_sum_qubit, threads);
    if (report.epsilon != epsilon || report.worst_x != worst_x) {
        throw std::logic_error("search result failed re-certification");
    }
    return SearchResult{std::move(best), std::move(report), trials_run, std::move(history)};
}

}  // namespace

void SearchConfig::validate() const {
    check_search_shape(q, n);
    if (trials < 1) {
        throw std::invalid_argument("trials must be positive");
    }
    double cost = static_cast<double>(trials) * static_cast<double>(q) * static_cast<double>(n);
    if (cost > kMaxSearchCost) {
        throw std::invalid_argument(
            "search budget trials*q*n = " + std::to_string(cost) + " exceeds 1e10 evaluations");
    }
    if (target_epsilon && !(*target_epsilon > 0 && *target_epsilon <= 1)) {
        throw std::invalid_argument("target epsilon must lie in (0, 1]");
    }
}

ParamSet draw_trial(uint64_t q, size_t n, uint64_t seed, uint64_t trial) {
    std::seed_seq seq{
        static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(trial),
        static_cast<uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<uint64_t> dist(1, q - 1);
    ParamSet p{q, std::vector<uint64_t>(n)};
    for (uint64_t &s : p.s) {
        s = dist(rng);
    }
    return p;
}

SearchResult random_search(const SearchConfig &cfg, HashForm form, bool include_sum_qubit) {
    cfg.validate();

    std::vector<SearchStep> history;
    std::optional<Scored> best;
    uint64_t best_worst_x = 0;
    uint64_t trials_run = 0;
    std::vector<ResistanceSummary> scores;

    for (uint64_t start = 0; start < cfg.trials; start += kBlock) {
        uint64_t count = std::min(kBlock, cfg.trials - start);
        scores.assign(count, ResistanceSummary{});
        parallel_for(count, cfg.threads, [&](uint64_t begin, uint64_t end) {
            for (uint64_t i = begin; i < end; i++) {
                scores[i] = resistance_summary(draw_trial(cfg.q, cfg.n, cfg.seed, start + i), form, include_sum_qubit);
            }
        });

        bool stop = false;
        for (uint64_t i = 0; i < count && !stop; i++) {
            uint64_t t = start + i;
            trials_run = t + 1;
            if (!best || scores[i].epsilon < best->epsilon) {
                best = Scored{t, scores[i].epsilon};
                best_worst_x = scores[i].worst_x;
                history.push_back(SearchStep{t, scores[i].epsilon});
            }
            stop = cfg.target_epsilon && scores[i].epsilon <= *cfg.target_epsilon;
        }
        if (stop) {
            break;
        }
    }

    return certify(
        draw_trial(cfg.q, cfg.n, cfg.seed, best->index), best->epsilon, best_worst_x, trials_run, std::move(history),
        form, include_sum_qubit, cfg.threads);
}

SearchResult exhaustive_search(uint64_t q, size_t n, HashForm form, bool include_sum_qubit, unsigned threads) {
    check_search_shape(q, n);
    if (std::pow(static_cast<double>(q), static_cast<double>(n)) > kMaxExhaustiveSpace) {
        throw std::invalid_argument(
            "exhaustive search space q^n exceeds 1e7 (q=" + std::to_string(q) + ", n=" + std::to_string(n) + ")");
    }
    uint64_t base = q - 1;
    uint64_t total = 1;
    for (size_t k = 0; k < n; k++) {
        total *= base;
    }
    // Rank r <-> tuple with s_0 most significant, digits offset by one.
    auto unrank = [&](uint64_t r) {
        ParamSet p{q, std::vector<uint64_t>(n)};
        for (size_t k = n; k-- > 0;) {
            p.s[k] = r % base + 1;
            r /= base;
        }
        return p;
    };

    // Each chunk keeps its own running-minimum improvements; merging them in
    // chunk order against the global running minimum gives the global history.
    struct Chunk {
        uint64_t begin;
        std::vector<SearchStep> improvements;
    };
    unsigned workers = resolve_threads(threads);
    std::vector<Chunk> chunks;
    uint64_t per = (total + workers - 1) / workers;
    for (uint64_t b = 0; b < total; b += per) {
        chunks.push_back(Chunk{b, {}});
    }
    parallel_for(chunks.size(), static_cast<unsigned>(chunks.size()), [&](uint64_t cb, uint64_t ce) {
        for (uint64_t c = cb; c < ce; c++) {
            Chunk &chunk = chunks[c];
            uint64_t end = std::min(total, chunk.begin + per);
            for (uint64_t r = chunk.begin; r < end; r++) {
                ResistanceSummary s = resistance_summary(unrank(r), form, include_sum_qubit);
                if (chunk.improvements.empty() || s.epsilon < chunk.improvements.back().epsilon) {
                    chunk.improvements.push_back(SearchStep{r, s.epsilon});
                }
            }
        }
    });

    std::vector<SearchStep> history;
    for (const Chunk &chunk : chunks) {
        for (const SearchStep &step : chunk.improvements) {
            if (history.empty() || step.epsilon < history.back().epsilon) {
                history.push_back(step);
            }
        }
    }
    ParamSet winner = unrank(history.back().trial);
    ResistanceSummary summary = resistance_summary(winner, form, include_sum_qubit);
    return certify(
        std::move(winner), summary.epsilon, summary.worst_x, total, std::move(history), form, include_sum_qubit,
        threads);
}

}  // namespace qhash
