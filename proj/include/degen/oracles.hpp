// Copyright 2026 The degen Authors
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

// Brute-force combinatorial oracles. Nothing in here touches Series or Poly,
// so these stay independent of the engine they are used to check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "degen/errors.hpp"

namespace degen::oracle {

inline constexpr int kMaxOracleN = 12;

/// counts[k] = number of partitions of an n-set into exactly k blocks, found by
/// walking every restricted growth string a_1..a_n (a_1 = 0, a_i <= 1 + max a_j<i).
inline std::vector<std::int64_t> partition_counts(int n) {
  if (n < 0 || n > kMaxOracleN) throw precondition_error("partition oracle: n must be in [0, 12]");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  if (n == 0) {
    counts[0] = 1;
    return counts;
  }
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);  // max of a[0..i]
  while (true) {
    ++counts[static_cast<std::size_t>(prefix_max[static_cast<std::size_t>(n - 1)]) + 1];
    int i = n - 1;
    while (i > 0 && a[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
    if (i == 0) break;
    ++a[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      a[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(j - 1)];
    }
  }
  return counts;
}

/// Number of partitions of an n-set into exactly k nonempty blocks.
inline std::int64_t partition_oracle(int n, int k) {
  if (n < 0 || n > kMaxOracleN) throw precondition_error("partition oracle: n must be in [0, 12]");
  if (k < 0 || k > n) return 0;
  return partition_counts(n)[static_cast<std::size_t>(k)];
}

/// Total number of set partitions of an n-set.
inline std::int64_t bell_number_classical(int n) {
  std::int64_t total = 0;
  for (auto c : partition_counts(n)) total += c;
  return total;
}

/// Coefficients of x(x-1)...(x-n+1), expanded with plain integer arithmetic.
inline std::vector<std::int64_t> falling_product_coefficients(int n) {
  if (n < 0 || n > kMaxOracleN) throw precondition_error("signed cycle oracle: n must be in [0, 12]");
  std::vector<std::int64_t> p{1};
  for (int j = 0; j < n; ++j) {
    std::vector<std::int64_t> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= static_cast<std::int64_t>(j) * p[i];
    }
    p = std::move(q);
  }
  return p;
}

/// Coefficient of x^k in (x)_n, i.e. the signed Stirling number of the first kind.
inline std::int64_t signed_cycle_oracle(int n, int k) {
  if (n < 0 || n > kMaxOracleN) throw precondition_error("signed cycle oracle: n must be in [0, 12]");
  if (k < 0 || k > n) return 0;
  return falling_product_coefficients(n)[static_cast<std::size_t>(k)];
}

}  // namespace degen::oracle
