// Copyright 2026 The qpath Authors
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

#ifndef QPATH_PARALLEL_HPP
#define QPATH_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace qpath {

/// Runs f(0..count-1) on worker threads; results land by index, so output
/// order does not depend on scheduling. f must not throw.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F f) {
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            f(i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; t++) {
        pool.emplace_back(work);
    }
    if (workers > 0) {
        work();
    }
    for (auto &t : pool) {
        t.join();
    }
}

}  // namespace qpath

#endif
