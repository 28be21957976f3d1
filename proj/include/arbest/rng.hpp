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

namespace arbest {

/// SplitMix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic splittable stream.
///
/// A stream is identified by its lineage key: the master seed folded with
/// every split label on the path from the master stream. Drawing values
/// advances `state` only; splitting reads the lineage only, so children do
/// not depend on how many values the parent has drawn.
class RngStream {
 public:
  explicit RngStream(std::uint64_t master_seed) noexcept
      : lineage_(mix64(master_seed ^ 0x6A09E667F3BCC908ULL)), state_(lineage_) {}

  template <class... Labels>
  RngStream split(Labels... labels) const noexcept {
    std::uint64_t key = lineage_;
    ((key = mix64(key ^ mix64(static_cast<std::uint64_t>(labels) + kGolden))), ...);
    return RngStream(key, Derived{});
  }

  std::uint64_t next_u64() noexcept { return mix64(state_ += kGolden); }

  /// Uniform in [0, 1) with 53 bits of precision.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [0, bound). `bound` must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept {
    // Lemire's multiply-shift with rejection.
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  std::uint64_t lineage() const noexcept { return lineage_; }

 private:
  struct Derived {};
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  RngStream(std::uint64_t key, Derived) noexcept : lineage_(key), state_(key) {}

  std::uint64_t lineage_;
  std::uint64_t state_;
};

}  // namespace arbest
