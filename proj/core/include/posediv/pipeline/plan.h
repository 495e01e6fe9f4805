// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "posediv/pipeline/records.h"

namespace posediv {

struct PlanOptions {
  std::uint64_t seed = 0;
  SearchConfig search;
  std::string config_hash;
  std::string config_json;
};

// For every source: draw finals_per_source final targets with an rng seeded
// from (seed, image_ref), run one progressive search per target and record
// each target step with its projection under the source camera. Search
// errors are recorded as PlanFailure for that source only. Throws
// Error(kInvalidArgument) for no sources, an empty set or duplicate refs.
TranslationManifest PlanManifest(std::span<const SourceRecord> sources,
                                 const NovelPoseSet& set,
                                 const PlanOptions& options);

std::string MakeJobId(const std::string& source_ref, std::size_t final_index);

}  // namespace posediv
