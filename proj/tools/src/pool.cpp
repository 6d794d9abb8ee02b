// Copyright 2026 The spinvar Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "spinvar/cli/pool.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace spinvar::cli {

std::size_t worker_count(std::size_t tasks) {
    std::size_t n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("SPINVAR_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap > 0) {
                n = std::min(n, static_cast<std::size_t>(cap));
            }
        } catch (const std::exception &) {
            // Ignore malformed values and keep the hardware count.
        }
    }
    return std::max<std::size_t>(1, std::min(n, tasks));
}

void run_parallel(const std::vector<std::function<void()>> &tasks, std::size_t workers) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first;
    std::mutex guard;
    const auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size() || failed.load()) {
                return;
            }
            try {
                tasks[i]();
            } catch (...) {
                const std::lock_guard lock(guard);
                if (!first) {
                    first = std::current_exception();
                }
                failed = true;
            }
        }
    };
    workers = std::max<std::size_t>(1, std::min(workers, tasks.size()));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back(work);
        }
    }
    if (first) {
        std::rethrow_exception(first);
    }
}

} // namespace spinvar::cli
