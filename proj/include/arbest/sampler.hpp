// Copyright 2026 The arbest Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "arbest/rng.hpp"

namespace arbest {

/// Loop iterations and array touches spent by a sampler call.
struct SamplerWork {
  std::uint64_t units = 0;
};

/// Binomial(k, p) by sequential inversion over the pmf, expected O(t + 1)
/// iterations for the returned t. When (1-p)^k underflows the pmf is walked
/// in log space until it becomes representable.
std::uint64_t binomial_draw(std::uint64_t k, double p, RngStream& rng,
                            SamplerWork* work = nullptr);

/// Uniform t-subset of {0, ..., k-1} in draw order, touching O(t)
/// positions of a virtual identity array. Throws std::invalid_argument if
/// t > k.
std::vector<std::uint64_t> distinct_indices(std::uint64_t k, std::uint64_t t,
                                            RngStream& rng,
                                            SamplerWork* work = nullptr);

/// Each index of {0, ..., k-1} independently with probability p.
std::vector<std::uint64_t> sample_subset(std::uint64_t k, double p, RngStream& rng,
                                         SamplerWork* work = nullptr);

}  // namespace arbest
