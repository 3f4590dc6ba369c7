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

#ifndef QHASH_PARALLEL_H
#define QHASH_PARALLEL_H

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace qhash {

/// 0 means "use every hardware thread".
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks and runs body(begin, end) on each
/// chunk in its own thread. Callers write into disjoint slots and reduce
/// afterwards, so results do not depend on the thread count.
template <typename Body>
void parallel_for(uint64_t count, unsigned threads, Body &&body) {
    uint64_t workers = std::min<uint64_t>(resolve_threads(threads), count);
    if (workers <= 1) {
        if (count > 0) {
            body(uint64_t{0}, count);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    uint64_t chunk = (count + workers - 1) / workers;
    for (uint64_t begin = 0; begin < count; begin += chunk) {
        uint64_t end = std::min(count, begin + chunk);
        pool.emplace_back([&body, begin, end] {
            body(begin, end);
        });
    }
}

}  // namespace qhash

#endif
