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
 * @file rng.hpp
 * Seedable, splittable xoshiro256** generator.
 *
 * Every experiment has one root seed. Independent streams (initial
 * parameters, optimizer perturbations, per-evaluation sampling, per
 * trajectory noise) are derived with `Rng::derive(seed, stream)`, so a run
 * is reproducible regardless of the order in which streams are consumed.
 */
#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace spinvar {

class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept;

    /// Child generator for stream `stream` of root seed `seed`.
    [[nodiscard]] static Rng derive(std::uint64_t seed,
                                    std::uint64_t stream) noexcept;
    [[nodiscard]] static std::uint64_t derive_seed(std::uint64_t seed,
                                                   std::uint64_t stream) noexcept;

    /// Child of this generator's seed (does not advance this generator).
    [[nodiscard]] Rng split(std::uint64_t stream) const noexcept {
        return derive(seed_, stream);
    }

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    result_type operator()() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept {
        return static_cast<double>((*this)() >> 11U) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) noexcept;

    /// +1 or -1 with equal probability.
    double rademacher() noexcept { return ((*this)() >> 63U) != 0 ? 1.0 : -1.0; }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

  private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> s_{};
};

} // namespace spinvar
