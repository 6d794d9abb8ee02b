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
/**
 * @file pool.hpp
 * Fixed-size worker pool for independent runs (seed sweeps, chain scans).
 */
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace spinvar::cli {

/// min(tasks, hardware threads, SPINVAR_THREADS when set and positive), at
/// least 1.
[[nodiscard]] std::size_t worker_count(std::size_t tasks);

/// Runs every task on `workers` threads. The first exception thrown by a
/// task is rethrown after all workers have stopped; remaining tasks are
/// skipped once a task has failed.
void run_parallel(const std::vector<std::function<void()>> &tasks, std::size_t workers);

} // namespace spinvar::cli
