// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/pipeline/plan.h"

#include <set>

#include "posediv/pipeline/seeding.h"

namespace posediv {

void SourceRecord::Validate() const {
  if (image_ref.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "source image_ref is empty");
  }
  camera.Validate();
  if (size.width <= 0 || size.height <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "source " + image_ref + ": size must be positive");
  }
}

std::string MakeJobId(const std::string& source_ref, std::size_t final_index) {
  return source_ref + "/f" + std::to_string(final_index);
}

TranslationManifest PlanManifest(std::span<const SourceRecord> sources,
                                 const NovelPoseSet& set,
                                 const PlanOptions& options) {
  if (sources.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "plan needs at least one source");
  }
  if (set.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "plan needs a non-empty pose set");
  }
  options.search.Validate();
  std::set<std::string> refs;
  for (const SourceRecord& s : sources) {
    s.Validate();
    if (!refs.insert(s.image_ref).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate source ref " + s.image_ref);
    }
  }

  TranslationManifest manifest;
  manifest.seed = options.seed;
  manifest.config_hash = options.config_hash;
  manifest.config_json = options.config_json;

  PairwiseDistanceCache cache(set);
  for (const SourceRecord& source : sources) {
    Rng rng(DeriveSeed(options.seed, source.image_ref));
    const SourceView view = source.View();
    std::vector<TranslationJob> jobs;
    try {
      const std::vector<std::size_t> finals =
          SelectFinalTargets(set, options.search.finals_per_source, rng);
      ProgressiveSearcher searcher(view, set, options.search, &cache);
      for (std::size_t i = 0; i < finals.size(); ++i) {
        TranslationJob job;
        job.source_ref = source.image_ref;
        job.final_index = finals[i];
        job.job_id = MakeJobId(source.image_ref, finals[i]);
        job.sequence_index = static_cast<int>(i);
        job.seed = rng();
        const TargetPoseSequence seq = searcher.Search(finals[i]);
        job.objective = seq.objective;
        for (std::size_t j = 0; j < seq.indices.size(); ++j) {
          job.steps.push_back(TargetStep{seq.indices[j], seq.poses[j],
                                         ProjectIntoView(view, seq.poses[j], set.metric())});
        }
        jobs.push_back(std::move(job));
      }
    } catch (const Error& e) {
      manifest.failures.push_back(
          {source.image_ref, std::string(ErrorCodeName(e.code())), e.what()});
      continue;
    }
    for (auto& job : jobs) manifest.jobs.push_back(std::move(job));
  }
  return manifest;
}

}  // namespace posediv
