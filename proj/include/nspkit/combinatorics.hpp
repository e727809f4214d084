// Copyright (c) 2026 The nspkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace nspkit {

/// Advance idx (a sorted k-subset of {0..n-1}) to its lexicographic
/// successor; false when idx was the last combination.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Visit every k-subset of {0, ..., n-1} in lexicographic order. The callback
/// returns false to stop early; the function returns whether the enumeration
/// ran to completion.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& visit) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
        if (!next_combination(idx, n)) return true;
    }
}

/// Binomial coefficient saturating at cap, for combinatorial budget checks.
inline std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        if (result > cap) return cap + 1;
        result = result * (n - k + i) / i;
    }
    return std::min(result, cap + 1);
}

}  // namespace nspkit
