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

#ifndef QHASH_SEARCH_H
#define QHASH_SEARCH_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qhash/analysis.h"
#include "qhash/hashing.h"

namespace qhash {

/// Upper bound on trials * q * n cosine evaluations for one search.
inline constexpr double kMaxSearchCost = 1e10;
/// Upper bound on q^n for exhaustive search.
inline constexpr double kMaxExhaustiveSpace = 1e7;

struct SearchConfig {
    uint64_t q = 0;
    size_t n = 0;
    uint64_t trials = 1;
    uint64_t seed = 0;
    /// Stop at the first trial whose epsilon is <= this.
    std::optional<double> target_epsilon;
    /// Worker threads; 0 = hardware concurrency. Never changes the result.
    unsigned threads = 0;

    void validate() const;
};

struct SearchStep {
    uint64_t trial;
    double epsilon;

    friend bool operator==(const SearchStep &, const SearchStep &) = default;
};

struct SearchResult {
    ParamSet best_set;
    /// Recomputed by a fresh sweep and checked against the search's own value.
    ResistanceReport report;
    uint64_t trials_run = 0;
    /// Strictly decreasing epsilon, one entry per improvement.
    std::vector<SearchStep> history;

    friend bool operator==(const SearchResult &, const SearchResult &) = default;
};

/// The parameter set drawn by trial t: n values uniform in [1, q), from a
/// generator seeded by (seed, t) alone.
ParamSet draw_trial(uint64_t q, size_t n, uint64_t seed, uint64_t trial);

/// Best of cfg.trials independent draws, minimum epsilon with ties kept by
/// lowest trial index. Deterministic in cfg minus cfg.threads.
SearchResult random_search(const SearchConfig &cfg, HashForm form, bool include_sum_qubit = false);

/// Global optimum over all of [1, q)^n, lexicographically smallest on ties.
/// history lists improvements in enumeration order; trial is the rank of the set.
SearchResult exhaustive_search(uint64_t q, size_t n, HashForm form, bool include_sum_qubit = false, unsigned threads = 0);

}  // namespace qhash

#endif
