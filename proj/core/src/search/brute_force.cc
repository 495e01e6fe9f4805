// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include <limits>

#include "posediv/search/progressive_search.h"

namespace posediv {

TargetPoseSequence BruteForceSearch(const SourceView& source,
                                    std::size_t final_index,
                                    const NovelPoseSet& set,
                                    const SearchConfig& config,
                                    std::uint64_t max_enumerations) {
  config.Validate();
  const std::size_t n = set.size();
  if (final_index >= n) {
    throw Error(ErrorCode::kNotInSet, "final target index is not in the set");
  }
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (int m = 1; m <= config.n_max; ++m) {
    total += layer;
    if (total > max_enumerations) {
      throw Error(ErrorCode::kEnumerationGuard,
                  "brute-force enumeration exceeds the guard");
    }
    if (m < config.n_max) {
      if (n != 0 && layer > max_enumerations / n + 1) {
        throw Error(ErrorCode::kEnumerationGuard,
                    "brute-force enumeration exceeds the guard");
      }
      layer *= n;
    }
  }

  const MetricContext& ctx = set.metric();
  std::vector<double> from_source(n);
  for (std::size_t j = 0; j < n; ++j) from_source[j] = PoseDistance(source, set[j], ctx);
  std::vector<double> between(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      between[i * n + j] = MemberDistance(config.deep_regime, source, set[i], set[j], ctx);
    }
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_seq;
  std::vector<std::size_t> seq;
  for (int m = 1; m <= config.n_max; ++m) {
    // Odometer over the m - 1 free positions; the last is always the final.
    std::vector<std::size_t> digits(m - 1, 0);
    while (true) {
      seq.assign(digits.begin(), digits.end());
      seq.push_back(final_index);
      // Right fold, matching how the recursion accumulates its terms.
      double value = DistancePower(
          m == 1 ? from_source[final_index] : between[seq[m - 2] * n + final_index],
          config.k);
      for (int i = m - 2; i >= 0; --i) {
        const double d = i == 0 ? from_source[seq[0]] : between[seq[i - 1] * n + seq[i]];
        value = DistancePower(d, config.k) + value;
      }
      if (value < best || (value == best && seq < best_seq)) {
        best = value;
        best_seq = seq;
      }
      int pos = m - 2;
      while (pos >= 0 && ++digits[pos] == n) digits[pos--] = 0;
      if (pos < 0) break;
    }
  }

  TargetPoseSequence out;
  out.objective = best;
  out.indices = best_seq;
  for (std::size_t i : best_seq) out.poses.push_back(set[i]);
  return out;
}

}  // namespace posediv
