// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "posediv/diffusion/synthetic_poses.h"
#include "posediv/novelset/novel_pose_set.h"
#include "posediv/search/progressive_search.h"

namespace posediv {
namespace {

NovelPoseSet MakeSet(int n) {
  NovelSetConfig cfg;
  cfg.n_pos = n;
  Rng rng(7);
  return BuildNovelSet([](Rng& r) { return RandomArticulatedPose(r); }, cfg, rng);
}

SourceView MakeSource() {
  Rng rng(8);
  CameraPose camera;
  camera.position = {3.0, -3.0, 1.2};
  camera.look_at = {0.0, 0.0, 1.0};
  camera.up = Eigen::Vector3d::UnitZ();
  const Pose3D seen = RandomArticulatedPose(rng);
  return {ProjectIntoView({Pose2D(seen.joints().leftCols<2>()), camera}, seen, {}), camera};
}

void BM_ProgressiveSearch(benchmark::State& state) {
  const NovelPoseSet set = MakeSet(static_cast<int>(state.range(0)));
  const SourceView source = MakeSource();
  SearchConfig cfg;
  cfg.n_max = static_cast<int>(state.range(1));
  cfg.prune = state.range(2) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ProgressiveSearch(source, 0, set, cfg).objective);
  }
}
BENCHMARK(BM_ProgressiveSearch)
    ->ArgsProduct({{50, 200}, {2, 3}, {0, 1}})
    ->ArgNames({"set", "n_max", "prune"})
    ->Unit(benchmark::kMillisecond);

void BM_BruteForceSearch(benchmark::State& state) {
  const NovelPoseSet set = MakeSet(static_cast<int>(state.range(0)));
  const SourceView source = MakeSource();
  SearchConfig cfg;
  cfg.n_max = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BruteForceSearch(source, 0, set, cfg).objective);
  }
}
BENCHMARK(BM_BruteForceSearch)->Arg(12)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace posediv
