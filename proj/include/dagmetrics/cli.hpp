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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dagmetrics/graph.hpp"
#include "dagmetrics/layering.hpp"
#include "dagmetrics/metrics.hpp"

namespace dagmetrics::cli {

enum ExitCode : int {
    ok = 0,
    unbalanced = 1,
    input_error = 2,
    usage_error = 3,
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

/// Oracle bound, taken from DAGMETRICS_ORACLE_BOUND when set.
/// Throws std::invalid_argument on a malformed value.
std::size_t oracle_bound_from_env();

// Cross-checks behind --verify. Each compares a computed result against the
// brute-force oracles; nullopt means the graph is outside the oracle bound.

std::optional<bool> verify_stretch(const Dag &g, const StretchResult &result, std::size_t bound);
bool verify_distances(const Dag &g, const DistanceMap &distances);
bool verify_diameter(const Dag &g, const DiameterResult &result, const DistanceMap &distances);
bool verify_layering(const Dag &g, const LayeringOutcome &outcome);

} // namespace dagmetrics::cli
