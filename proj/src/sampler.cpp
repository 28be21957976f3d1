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

#include "arbest/sampler.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace arbest {

namespace {

// log q below this is treated as zero mass; exp(-700) is ~1e-304.
constexpr double kLogFloor = -700.0;

void add_work(SamplerWork* work, std::uint64_t units) {
  if (work) work->units += units;
}

// Sparse view of the identity array a[i] = i with point overrides. Small
// override sets live in an inline array; larger ones move to a hash map.
class SparseSwapArray {
 public:
  explicit SparseSwapArray(std::uint64_t expected) {
    if (expected > kFlatLimit) map_.emplace().reserve(2 * expected);
  }

  std::uint64_t get(std::uint64_t i) const {
    if (map_) {
      auto it = map_->find(i);
      return it == map_->end() ? i : it->second;
    }
    for (std::size_t k = 0; k < size_; ++k) {
      if (flat_[k].key == i) return flat_[k].value;
    }
    return i;
  }

  void set(std::uint64_t i, std::uint64_t value) {
    if (map_) {
      (*map_)[i] = value;
      return;
    }
    for (std::size_t k = 0; k < size_; ++k) {
      if (flat_[k].key == i) {
        flat_[k].value = value;
        return;
      }
    }
    flat_[size_++] = {i, value};
  }

 private:
  // t draws override at most t positions.
  static constexpr std::size_t kFlatLimit = 16;
  std::size_t size_ = 0;
  struct Entry {
    std::uint64_t key;
    std::uint64_t value;
  };
  Entry flat_[kFlatLimit];  // first size_ entries are live
  std::optional<std::unordered_map<std::uint64_t, std::uint64_t>> map_;
};

}  // namespace

std::uint64_t binomial_draw(std::uint64_t k, double p, RngStream& rng, SamplerWork* work) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial_draw: p outside [0, 1]");
  if (k == 0 || p == 0.0) {
    add_work(work, 1);
    return 0;
  }
  if (p == 1.0) {
    add_work(work, 1);
    return k;
  }

  // Callers draw many samples at one p.
  thread_local double cached_p = -1.0, cached_log1m = 0.0, cached_log_ratio = 0.0;
  if (p != cached_p) {
    cached_p = p;
    cached_log1m = std::log1p(-p);
    cached_log_ratio = std::log(p) - cached_log1m;
  }
  const double kd = static_cast<double>(k);
  const double log_ratio = cached_log_ratio;
  double u = rng.next_double();
  double log_q = kd * cached_log1m;
  double q = log_q > kLogFloor ? std::exp(log_q) : 0.0;
  bool linear = log_q > kLogFloor;
  const double ratio = p / (1.0 - p);

  for (std::uint64_t i = 0; i < k; ++i) {
    add_work(work, 1);
    if (linear) {
      if (u < q) return i;
      u -= q;
      q *= ratio * (kd - static_cast<double>(i)) / static_cast<double>(i + 1);
    } else {
      log_q += log_ratio + std::log((kd - static_cast<double>(i)) / static_cast<double>(i + 1));
      if (log_q > kLogFloor) {
        q = std::exp(log_q);
        linear = true;
      }
    }
  }
  add_work(work, 1);
  return k;
}

std::vector<std::uint64_t> distinct_indices(std::uint64_t k, std::uint64_t t, RngStream& rng,
                                            SamplerWork* work) {
  if (t > k) throw std::invalid_argument("distinct_indices: t exceeds k");
  std::vector<std::uint64_t> out;
  out.reserve(t);
  SparseSwapArray a(t);
  for (std::uint64_t i = 0; i < t; ++i) {
    const std::uint64_t j = i + rng.uniform_below(k - i);
    const std::uint64_t aj = a.get(j);
    if (j != i) a.set(j, a.get(i));
    out.push_back(aj);
    add_work(work, 1);
  }
  return out;
}

std::vector<std::uint64_t> sample_subset(std::uint64_t k, double p, RngStream& rng,
                                         SamplerWork* work) {
  const std::uint64_t t = binomial_draw(k, p, rng, work);
  return distinct_indices(k, t, rng, work);
}

}  // namespace arbest
