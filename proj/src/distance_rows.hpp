/*
Copyright 2026 The dagmetrics Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "dagmetrics/metrics.hpp"

namespace dagmetrics::detail {

// Builds the distance row of one vertex from the finished rows of its
// successors: d(p,c) = 1 on every edge, then the min over successors of the
// successor's row shifted by one. One instance per thread.
class RowBuilder {
  public:
    explicit RowBuilder(std::size_t n);

    std::vector<DistanceMap::Entry> build(const Dag &g, VertexId p,
                                          const std::vector<std::vector<DistanceMap::Entry>> &rows,
                                          std::uint64_t &updates);

  private:
    std::vector<std::uint32_t> scratch_; // 0 = not reached yet
    std::vector<VertexId> touched_;
};

} // namespace dagmetrics::detail
