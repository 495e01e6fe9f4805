// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/search/progressive_search.h"

#include <cmath>
#include <limits>

namespace posediv {
namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kMaxMemoMembers = 4096;

}  // namespace

void SearchConfig::Validate() const {
  if (k < 1) throw Error(ErrorCode::kRange, "k must be >= 1");
  if (n_max < 1) throw Error(ErrorCode::kRange, "n_max must be >= 1");
  if (finals_per_source < 1) {
    throw Error(ErrorCode::kRange, "finals_per_source must be >= 1");
  }
}

double DistancePower(double d, int k) {
  double out = d;
  for (int i = 1; i < k; ++i) out *= d;
  return out;
}

ProgressiveSearcher::ProgressiveSearcher(const SourceView& source,
                                         const NovelPoseSet& set,
                                         const SearchConfig& config,
                                         PairwiseDistanceCache* cache)
    : source_(source), set_(set), config_(config), cache_(cache) {
  config_.Validate();
  if (set_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "search over an empty pose set");
  }
  if (cache_ != nullptr && &cache_->set() != &set_) {
    throw Error(ErrorCode::kInvalidArgument, "distance cache belongs to another set");
  }
  // Degenerate source poses fail here rather than midway through a search.
  NormalizePoseVector(source_.pose, set_.metric().skeleton);
  source_row_.assign(set_.size(), kUnset);
  const bool use_own_table = cache_ == nullptr || config_.deep_regime != DeepRegime::k3D;
  if (use_own_table && set_.size() <= kMaxMemoMembers) {
    member_table_.assign(set_.size() * set_.size(), kUnset);
  }
}

double ProgressiveSearcher::SourceDistance(std::size_t j) {
  double& slot = source_row_[j];
  if (std::isnan(slot)) slot = PoseDistance(source_, set_[j], set_.metric());
  return slot;
}

double ProgressiveSearcher::Distance(std::optional<std::size_t> anchor,
                                     std::size_t j) {
  if (!anchor) return SourceDistance(j);
  if (config_.deep_regime == DeepRegime::k3D && cache_ != nullptr) {
    return cache_->Get(*anchor, j);
  }
  auto compute = [&] {
    return MemberDistance(config_.deep_regime, source_, set_[*anchor], set_[j],
                          set_.metric());
  };
  if (member_table_.empty()) return compute();
  double& slot = member_table_[*anchor * set_.size() + j];
  if (std::isnan(slot)) slot = compute();
  return slot;
}

void ProgressiveSearcher::CheckFinal(std::size_t final_index) const {
  if (final_index >= set_.size()) {
    throw Error(ErrorCode::kNotInSet, "final target index is not in the set");
  }
}

ProgressiveSearcher::Partial ProgressiveSearcher::Recurse(
    std::optional<std::size_t> prev, std::size_t final_index, int budget) {
  ++stats_.calls;
  if (prev && *prev == final_index) return {0.0, {}};

  const double d_final = Distance(prev, final_index);
  Partial best{DistancePower(d_final, config_.k), {final_index}};
  if (budget == 1) return best;

  for (std::size_t p = 0; p < set_.size(); ++p) {
    const double d_p = Distance(prev, p);
    if (config_.prune && !(d_p <= d_final)) {
      ++stats_.pruned;
      continue;
    }
    ++stats_.expanded;
    Partial next = Recurse(p, final_index, budget - 1);
    const double value = DistancePower(d_p, config_.k) + next.objective;
    if (value < best.objective) {
      best.objective = value;
      best.suffix.clear();
      best.suffix.push_back(p);
      best.suffix.insert(best.suffix.end(), next.suffix.begin(), next.suffix.end());
    }
  }
  return best;
}

TargetPoseSequence ProgressiveSearcher::Finish(Partial partial) const {
  TargetPoseSequence out;
  out.objective = partial.objective;
  out.indices = std::move(partial.suffix);
  out.poses.reserve(out.indices.size());
  for (std::size_t i : out.indices) out.poses.push_back(set_[i]);
  return out;
}

TargetPoseSequence ProgressiveSearcher::Search(std::size_t final_index) {
  CheckFinal(final_index);
  return Finish(Recurse(std::nullopt, final_index, config_.n_max));
}

TargetPoseSequence ProgressiveSearcher::SearchFromMember(std::size_t prev_index,
                                                         std::size_t final_index,
                                                         int budget) {
  CheckFinal(final_index);
  if (prev_index >= set_.size()) {
    throw Error(ErrorCode::kNotInSet, "previous pose index is not in the set");
  }
  if (budget < 1) throw Error(ErrorCode::kRange, "budget must be >= 1");
  return Finish(Recurse(prev_index, final_index, budget));
}

std::vector<std::size_t> ProgressiveSearcher::CandidateFilter(
    std::optional<std::size_t> anchor, std::size_t final_index) {
  CheckFinal(final_index);
  const double d_final = Distance(anchor, final_index);
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < set_.size(); ++p) {
    if (Distance(anchor, p) <= d_final) out.push_back(p);
  }
  return out;
}

TargetPoseSequence ProgressiveSearch(const SourceView& source,
                                     std::size_t final_index,
                                     const NovelPoseSet& set,
                                     const SearchConfig& config) {
  ProgressiveSearcher searcher(source, set, config);
  return searcher.Search(final_index);
}

}  // namespace posediv
