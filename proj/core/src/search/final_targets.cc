// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include <numeric>

#include "posediv/search/progressive_search.h"

namespace posediv {

std::vector<std::size_t> SelectFinalTargets(const NovelPoseSet& set, int count,
                                            Rng& rng) {
  if (count < 0 || static_cast<std::size_t>(count) > set.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot select more final targets than the set holds");
  }
  std::vector<std::size_t> pool(set.size());
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  // Partial Fisher-Yates: the first `count` slots are a uniform draw.
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace posediv
