// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "posediv/pipeline/adapters.h"
#include "posediv/pipeline/records.h"

namespace posediv {

// Runs every job's steps in order, feeding each generated image to the next
// step as its source, and estimates the pose of every generated image. An
// adapter failure stops that job only: completed steps are kept and the job
// is marked failed at the failing step. Jobs run on up to `workers` threads;
// results are returned in manifest order regardless.
std::vector<JobResult> ExecuteManifest(const TranslationManifest& manifest,
                                       ImageTranslator& translator,
                                       PoseEstimator& estimator, int workers = 1);

JobResult ExecuteJob(const TranslationJob& job, ImageTranslator& translator,
                     PoseEstimator& estimator);

}  // namespace posediv
