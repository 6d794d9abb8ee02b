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
 * @file app.hpp
 * Command-line front end: mgm-ground, mgm-gap, maxcut and benchmark.
 */
#pragma once

#include <iosfwd>

namespace spinvar::cli {

/// Exit codes: 0 success, 2 invalid usage or input, 3 runtime failure.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_runtime = 3;

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace spinvar::cli
