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

#include "arbest/scheduler.hpp"

namespace arbest {

std::vector<std::uint32_t> active_lanes(std::uint64_t y) {
  const std::uint32_t top = trailing_zeros(y) + 1;
  std::vector<std::uint32_t> out(top);
  for (std::uint32_t t = 0; t < top; ++t) out[t] = t + 1;
  return out;
}

}  // namespace arbest
