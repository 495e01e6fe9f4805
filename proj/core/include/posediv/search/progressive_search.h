// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posediv/novelset/novel_pose_set.h"
#include "posediv/search/distance_table.h"

namespace posediv {

struct SearchConfig {
  int k = 2;      // distance exponent
  int n_max = 3;  // maximum number of target poses
  int finals_per_source = 5;
  DeepRegime deep_regime = DeepRegime::k3D;
  // Skip candidates p with d(prev, p) > d(prev, final). Never changes the
  // optimum; exposed so tests can prove that.
  bool prune = true;

  void Validate() const;
  friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

// Intermediate target poses followed by the final target.
struct TargetPoseSequence {
  double objective = 0.0;
  std::vector<std::size_t> indices;  // into the novel pose set
  std::vector<Pose3D> poses;
  std::string source_ref;
};

struct SearchStats {
  std::uint64_t calls = 0;
  std::uint64_t pruned = 0;
  std::uint64_t expanded = 0;
};

// x^k by repeated multiplication; shared by the search and its oracle so both
// see bit-identical terms.
double DistancePower(double d, int k);

// Bounded-depth recursive search minimizing
//
//   sum_i d(p_{i-1}, p_i)^k   over sequences p_1..p_n = final, n <= n_max.
//
// Each level scans the whole set, discards candidates failing the pruning
// test, recurses with one fewer pose and keeps the first strict improvement
// over going straight to the final pose. Recursion stops when the previous
// pose is the final pose or the budget is 1. The first level is anchored on
// the 2D source pose; deeper levels on set members per `deep_regime`.
class ProgressiveSearcher {
 public:
  // `cache` (optional) must belong to `set`; it is used only for the
  // k3D deep regime.
  ProgressiveSearcher(const SourceView& source, const NovelPoseSet& set,
                      const SearchConfig& config,
                      PairwiseDistanceCache* cache = nullptr);

  TargetPoseSequence Search(std::size_t final_index);

  // The recursion entered at a set member with a given budget. Returns the
  // suffix after `prev_index`, which is empty when prev_index == final.
  TargetPoseSequence SearchFromMember(std::size_t prev_index,
                                      std::size_t final_index, int budget);

  // Members p with d(anchor, p) <= d(anchor, final). nullopt = the source.
  std::vector<std::size_t> CandidateFilter(std::optional<std::size_t> anchor,
                                           std::size_t final_index);

  double SourceDistance(std::size_t j);
  double Distance(std::optional<std::size_t> anchor, std::size_t j);

  const SearchStats& stats() const { return stats_; }

 private:
  struct Partial {
    double objective;
    std::vector<std::size_t> suffix;
  };

  Partial Recurse(std::optional<std::size_t> prev, std::size_t final_index,
                  int budget);
  TargetPoseSequence Finish(Partial partial) const;
  void CheckFinal(std::size_t final_index) const;

  const SourceView& source_;
  const NovelPoseSet& set_;
  SearchConfig config_;
  PairwiseDistanceCache* cache_;
  std::vector<double> source_row_;  // NaN = not computed
  std::vector<double> member_table_;
  SearchStats stats_;
};

TargetPoseSequence ProgressiveSearch(const SourceView& source,
                                     std::size_t final_index,
                                     const NovelPoseSet& set,
                                     const SearchConfig& config);

// Test oracle: enumerates every sequence of length 1..n_max over the set
// that ends at the final pose (repeats allowed), evaluates the objective
// directly and keeps the minimum, breaking ties toward the lexicographically
// smallest index sequence. Throws Error(kEnumerationGuard) when
// sum_{m=1..n_max} |set|^(m-1) exceeds `max_enumerations`.
TargetPoseSequence BruteForceSearch(const SourceView& source,
                                    std::size_t final_index,
                                    const NovelPoseSet& set,
                                    const SearchConfig& config,
                                    std::uint64_t max_enumerations = 1'000'000);

// `count` distinct indices drawn uniformly without replacement.
std::vector<std::size_t> SelectFinalTargets(const NovelPoseSet& set, int count,
                                            Rng& rng);

}  // namespace posediv
