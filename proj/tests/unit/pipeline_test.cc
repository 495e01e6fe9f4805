// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "posediv/error.h"
#include "posediv/io/formats.h"
#include "posediv/pipeline/adapters.h"
#include "posediv/pipeline/execute.h"
#include "posediv/pipeline/filter.h"
#include "posediv/pipeline/mask.h"
#include "posediv/pipeline/placement.h"
#include "posediv/pipeline/plan.h"
#include "posediv/pipeline/raster.h"
#include "posediv/pipeline/seeding.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace posediv {
namespace {

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected posediv::Error";
  return ErrorCode::kIo;
}

std::string ManifestText(const TranslationManifest& m) {
  std::ostringstream out;
  WriteManifest(out, m);
  return out.str();
}

TranslationManifest SmallPlan(int sources, int set_size, std::uint64_t seed,
                              SearchConfig search = {}) {
  Rng rng(seed);
  const NovelPoseSet set = testing::RandomSet(set_size, rng);
  const std::vector<SourceRecord> src = testing::RandomSources(sources, rng);
  PlanOptions opts;
  opts.seed = seed;
  opts.search = search;
  return PlanManifest(src, set, opts);
}

JobResult ResultWithEstimates(const std::vector<double>& distances, Rng& rng) {
  JobResult r;
  r.job_id = "job";
  r.source_ref = "src.png";
  for (std::size_t i = 0; i < distances.size(); ++i) {
    auto [target, estimate] = testing::PosePairAtDistance(distances[i], rng);
    r.steps.push_back(StepResult{static_cast<int>(i + 1), i, "gen" + std::to_string(i),
                                 target, estimate});
  }
  return r;
}

// ---- Planning ----

TEST(Plan, OneSourceWithDefaultsGivesFiveShortJobs) {
  const TranslationManifest m = SmallPlan(1, 30, 1);
  ASSERT_EQ(m.jobs.size(), 5u);
  EXPECT_TRUE(m.failures.empty());
  std::set<std::size_t> finals;
  for (const TranslationJob& job : m.jobs) {
    EXPECT_GE(job.steps.size(), 1u);
    EXPECT_LE(job.steps.size(), 3u);
    EXPECT_EQ(job.steps.back().set_index, job.final_index);
    finals.insert(job.final_index);
  }
  EXPECT_EQ(finals.size(), 5u);
}

TEST(Plan, StepsCarryProjectionUnderSourceCamera) {
  Rng rng(2);
  const NovelPoseSet set = testing::RandomSet(20, rng);
  const std::vector<SourceRecord> src = testing::RandomSources(2, rng);
  const TranslationManifest m = PlanManifest(src, set, PlanOptions{});
  for (const TranslationJob& job : m.jobs) {
    const SourceRecord& s = job.source_ref == src[0].image_ref ? src[0] : src[1];
    for (const TargetStep& step : job.steps) {
      EXPECT_EQ(step.pose3d, set[step.set_index]);
      EXPECT_EQ(step.pose2d, ProjectIntoView(s.View(), step.pose3d, set.metric()));
    }
  }
}

TEST(Plan, ByteIdenticalReruns) {
  const TranslationManifest a = SmallPlan(3, 50, 3);
  const TranslationManifest b = SmallPlan(3, 50, 3);
  EXPECT_EQ(a.jobs.size(), 15u);
  EXPECT_EQ(ManifestText(a), ManifestText(b));
  std::set<std::string> ids;
  for (const auto& job : a.jobs) ids.insert(job.job_id);
  EXPECT_EQ(ids.size(), a.jobs.size());
  EXPECT_NE(ManifestText(a), ManifestText(SmallPlan(3, 50, 4)));
}

TEST(Plan, RejectsEmptyInputsAndDuplicateRefs) {
  Rng rng(4);
  const NovelPoseSet set = testing::RandomSet(10, rng);
  std::vector<SourceRecord> src = testing::RandomSources(2, rng);
  EXPECT_EQ(CodeOf([&] { PlanManifest({}, set, PlanOptions{}); }), ErrorCode::kInvalidArgument);
  NovelPoseSet empty(NovelSetConfig{});
  EXPECT_EQ(CodeOf([&] { PlanManifest(src, empty, PlanOptions{}); }),
            ErrorCode::kInvalidArgument);
  src[1].image_ref = src[0].image_ref;
  EXPECT_EQ(CodeOf([&] { PlanManifest(src, set, PlanOptions{}); }), ErrorCode::kInvalidArgument);
}

TEST(Plan, FailingSourceIsRecordedAndOthersProceed) {
  Rng rng(5);
  MetricContext pinhole;
  pinhole.projection = ProjectionConfig{ProjectionMode::kPinhole, 1.0};
  NovelPoseSet set(NovelSetConfig{}, pinhole);
  for (int i = 0; i < 10; ++i) set.AppendUnchecked(testing::PlausiblePose(rng));
  std::vector<SourceRecord> src = testing::RandomSources(2, rng);
  // Camera inside the body: joints land behind the image plane.
  src[0].camera.position = src[0].camera.look_at + Eigen::Vector3d(0.05, 0.0, 0.0);
  const TranslationManifest m = PlanManifest(src, set, PlanOptions{});
  ASSERT_EQ(m.failures.size(), 1u);
  EXPECT_EQ(m.failures[0].source_ref, src[0].image_ref);
  EXPECT_EQ(m.failures[0].code, "projection");
  EXPECT_EQ(m.jobs.size(), 5u);
  for (const auto& job : m.jobs) EXPECT_EQ(job.source_ref, src[1].image_ref);
}

TEST(Plan, JobSeedsDifferAndDeriveFromRunSeed) {
  const TranslationManifest m = SmallPlan(2, 20, 6);
  std::set<std::uint64_t> seeds;
  for (const auto& job : m.jobs) seeds.insert(job.seed);
  EXPECT_EQ(seeds.size(), m.jobs.size());
  EXPECT_NE(DeriveSeed(6, "a"), DeriveSeed(6, "b"));
  EXPECT_EQ(DeriveSeed(6, "a"), DeriveSeed(6, "a"));
}

// ---- Execution ----

class RecordingTranslator : public ImageTranslator {
 public:
  std::string Translate(const TranslateRequest& r) override {
    sources.push_back(r.source_image_ref);
    return inner.Translate(r);
  }
  MockStudio inner;
  std::vector<std::string> sources;
};

TEST(Execute, EachStepTranslatesThePreviousOutput) {
  const TranslationManifest m = SmallPlan(1, 30, 7);
  RecordingTranslator rec;
  for (const TranslationJob& job : m.jobs) {
    rec.sources.clear();
    const JobResult r = ExecuteJob(job, rec, rec.inner);
    ASSERT_EQ(r.status, JobStatus::kOk);
    ASSERT_EQ(r.steps.size(), job.steps.size());
    ASSERT_EQ(rec.sources.size(), job.steps.size());
    EXPECT_EQ(rec.sources[0], job.source_ref);
    for (std::size_t i = 1; i < r.steps.size(); ++i) {
      EXPECT_EQ(rec.sources[i], r.steps[i - 1].generated_ref);
    }
  }
}

TEST(Execute, ZeroNoiseMockReproducesTargets) {
  const TranslationManifest m = SmallPlan(2, 30, 8);
  MockStudio mock;
  const auto results = ExecuteManifest(m, mock, mock);
  std::size_t steps = 0;
  for (const JobResult& r : results) {
    for (const StepResult& s : r.steps) {
      ASSERT_TRUE(s.estimated2d.has_value());
      EXPECT_EQ(*s.estimated2d, s.target2d);
      ++steps;
    }
  }
  const auto decisions = FilterNoisy(results);
  EXPECT_EQ(decisions.size(), steps);
  EXPECT_EQ(CountKept(decisions), steps);
}

TEST(Execute, FailureAtStepTwoKeepsTheFirstStep) {
  SearchConfig search;
  search.n_max = 3;
  const TranslationManifest m = SmallPlan(1, 30, 9, search);
  MockOptions opts;
  opts.fail_at_step = 2;
  MockStudio mock(opts);
  TranslationJob job = m.jobs[0];
  while (job.steps.size() < 3) job.steps.insert(job.steps.begin(), job.steps.front());
  const JobResult r = ExecuteJob(job, mock, mock);
  EXPECT_EQ(r.status, JobStatus::kFailed);
  EXPECT_EQ(r.failed_at, 2);
  EXPECT_EQ(r.steps.size(), 1u);
  EXPECT_FALSE(r.failure_message.empty());
}

TEST(Execute, ParallelWorkersMatchSerialOrder) {
  const TranslationManifest m = SmallPlan(3, 30, 10);
  MockOptions opts;
  opts.noise = 0.05;
  MockStudio a(opts);
  MockStudio b(opts);
  const auto serial = ExecuteManifest(m, a, a, 1);
  const auto parallel = ExecuteManifest(m, b, b, 4);
  std::ostringstream x;
  std::ostringstream y;
  WriteResults(x, ResultsFile{10, "", serial});
  WriteResults(y, ResultsFile{10, "", parallel});
  EXPECT_EQ(x.str(), y.str());
  EXPECT_EQ(CodeOf([&] { ExecuteManifest(m, a, a, 0); }), ErrorCode::kInvalidArgument);
}

TEST(Execute, LargeMockNoiseIsFilteredOut) {
  const TranslationManifest m = SmallPlan(2, 30, 11);
  MockOptions opts;
  opts.noise = 0.3;
  MockStudio mock(opts);
  const auto decisions = FilterNoisy(ExecuteManifest(m, mock, mock));
  ASSERT_FALSE(decisions.empty());
  EXPECT_EQ(CountKept(decisions), 0u);
  for (const auto& d : decisions) EXPECT_EQ(d.reason, "distance_above_threshold");
}

// ---- Filtering ----

TEST(Filter, ExampleDriftDistancesAllRejected) {
  Rng rng(12);
  const std::vector<JobResult> results = {ResultWithEstimates({0.32, 0.16, 0.22, 0.15}, rng)};
  const auto decisions = FilterNoisy(results, 0.1);
  ASSERT_EQ(decisions.size(), 4u);
  const double expected[] = {0.32, 0.16, 0.22, 0.15};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_FALSE(decisions[i].kept);
    EXPECT_NEAR(*decisions[i].distance, expected[i], 1e-12);
  }
}

TEST(Filter, BoundaryIsKept) {
  EXPECT_TRUE(KeepAtDistance(0.1, 0.1));
  EXPECT_FALSE(KeepAtDistance(std::nextafter(0.1, 1.0), 0.1));
  EXPECT_TRUE(KeepAtDistance(0.0, 0.0));
}

TEST(Filter, NoSurprisesAtTightMargins) {
  Rng rng(13);
  const std::vector<JobResult> results = {ResultWithEstimates({0.1 - 1e-9, 0.1 + 1e-9}, rng)};
  const auto decisions = FilterNoisy(results, 0.1);
  EXPECT_TRUE(decisions[0].kept);
  EXPECT_FALSE(decisions[1].kept);
}

TEST(Filter, MissingEstimateIsRejectedWithReason) {
  Rng rng(14);
  JobResult r = ResultWithEstimates({0.05, 0.05}, rng);
  r.steps[1].estimated2d.reset();
  const auto decisions = FilterNoisy(std::vector<JobResult>{r});
  EXPECT_TRUE(decisions[0].kept);
  EXPECT_TRUE(decisions[0].reason.empty());
  EXPECT_FALSE(decisions[1].kept);
  EXPECT_FALSE(decisions[1].distance.has_value());
  EXPECT_EQ(decisions[1].reason, "no_estimate");
}

TEST(Filter, DegenerateEstimateIsRejectedWithCode) {
  Rng rng(15);
  JobResult r = ResultWithEstimates({0.05}, rng);
  Pose2D::Matrix collapsed = Pose2D::Matrix::Ones();
  r.steps[0].estimated2d = Pose2D(collapsed);
  const auto decisions = FilterNoisy(std::vector<JobResult>{r});
  EXPECT_FALSE(decisions[0].kept);
  EXPECT_EQ(decisions[0].reason, "invalid_estimate: degenerate_pose");
}

TEST(Filter, ThresholdOutOfRange) {
  EXPECT_EQ(CodeOf([] { FilterNoisy({}, -0.1); }), ErrorCode::kRange);
  EXPECT_EQ(CodeOf([] { FilterNoisy({}, 2.1); }), ErrorCode::kRange);
}

TEST(Filter, PartitionAndMonotoneInThreshold) {
  Rng rng(16);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  std::vector<double> ds;
  for (int i = 0; i < 500; ++i) ds.push_back(u(rng));
  const std::vector<JobResult> results = {ResultWithEstimates(ds, rng)};
  std::size_t prev_kept = 0;
  for (double t : {0.0, 0.05, 0.1, 0.2, 0.5}) {
    const auto decisions = FilterNoisy(results, t);
    const std::size_t kept = CountKept(decisions);
    EXPECT_EQ(decisions.size(), ds.size());
    EXPECT_GE(kept, prev_kept);
    prev_kept = kept;
  }
}

// ---- Masks and morphology ----

TEST(Mask, UniformBackgroundGivesEmptyMask) {
  const Raster r(12, 9, kMidGray);
  EXPECT_TRUE(ExtractMask(r, kMidGray, 0.0).Empty());
}

TEST(Mask, SingleOffColourPixel) {
  Raster r(12, 9, kMidGray);
  r.at(4, 7) = Rgb{129, 128, 128};
  const BinaryMask m = ExtractMask(r, kMidGray, 0.0);
  EXPECT_EQ(m.Count(), 1u);
  EXPECT_TRUE(m.Get(4, 7));
  EXPECT_TRUE(ExtractMask(r, kMidGray, 1.0).Empty());
}

TEST(Mask, RenderedSilhouetteRoundTrips) {
  Rng rng(17);
  const Rgb fg = {200, 60, 40};
  const Raster r = RenderSilhouette(testing::GaussianPose2D(rng), 64, 80, kMidGray, fg);
  const BinaryMask m = ExtractMask(r, kMidGray, 0.0);
  EXPECT_FALSE(m.Empty());
  for (int y = 0; y < r.height; ++y) {
    for (int x = 0; x < r.width; ++x) EXPECT_EQ(m.Get(x, y), r.at(x, y) == fg);
  }
}

TEST(Morphology, EmptyAndFullAreFixedPoints) {
  const BinaryMask empty(7, 5);
  EXPECT_EQ(MorphCleanup(empty), empty);
  BinaryMask full(7, 5);
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 7; ++x) full.Set(x, y, true);
  }
  EXPECT_EQ(MorphCleanup(full), full);
}

TEST(Morphology, CentrePixelBecomesFiveByFive) {
  BinaryMask m(21, 21);
  m.Set(10, 10, true);
  const BinaryMask out = MorphCleanup(m);
  EXPECT_EQ(out.Count(), 25u);
  EXPECT_EQ(out.BoundingBox(), (Box{8, 8, 5, 5}));
  EXPECT_EQ(testing::ToPixelSet(out), testing::SetCleanup(testing::ToPixelSet(m), 21, 21));
}

TEST(Morphology, SingleStepsMatchSetOracle) {
  Rng rng(18);
  std::bernoulli_distribution bit(0.3);
  for (int trial = 0; trial < 100; ++trial) {
    const int w = 1 + static_cast<int>(rng() % 16);
    const int h = 1 + static_cast<int>(rng() % 16);
    BinaryMask m(w, h);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) m.Set(x, y, bit(rng));
    }
    const auto s = testing::ToPixelSet(m);
    EXPECT_EQ(testing::ToPixelSet(Dilate(m)), testing::SetDilate(s, w, h));
    EXPECT_EQ(testing::ToPixelSet(Erode(m)), testing::SetErode(s, w, h));
    EXPECT_EQ(testing::ToPixelSet(MorphCleanup(m)), testing::SetCleanup(s, w, h));
  }
}

// ---- Resize and placement ----

BinaryMask BoxMask(int w, int h, Box box) {
  BinaryMask m(w, h);
  for (int y = box.y; y < box.Bottom(); ++y) {
    for (int x = box.x; x < box.Right(); ++x) m.Set(x, y, true);
  }
  return m;
}

TEST(Resize, LongerSideRatio) {
  Rng rng(19);
  const BinaryMask m = BoxMask(40, 40, Box{3, 5, 10, 20});
  const std::vector<SizeEntry> one = {{30, 40}};
  EXPECT_DOUBLE_EQ(ResizeFactor(m, one, rng), 2.0);
  const std::vector<SizeEntry> same = {{20, 7}};
  EXPECT_DOUBLE_EQ(ResizeFactor(m, same, rng), 1.0);
  EXPECT_EQ(CodeOf([&] { ResizeFactor(BinaryMask(4, 4), one, rng); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { ResizeFactor(m, std::vector<SizeEntry>{}, rng); }),
            ErrorCode::kInvalidArgument);
}

TEST(Resize, FactorsFollowTableDistribution) {
  Rng rng(20);
  const BinaryMask m = BoxMask(30, 30, Box{0, 0, 10, 20});
  const std::vector<SizeEntry> table = {{10, 20}, {15, 40}, {60, 10}, {5, 5}, {25, 30}};
  std::vector<std::pair<double, double>> dist;
  for (const auto& e : table) dist.push_back({e.LongerSide() / 20.0, 1.0 / table.size()});
  std::vector<double> samples;
  for (int i = 0; i < 1000; ++i) samples.push_back(ResizeFactor(m, table, rng));
  EXPECT_LT(testing::KsStatisticDiscrete(samples, dist), testing::KsCritical01(samples.size()));
}

ScaledHuman Human(const std::string& ref, int w, int h, double scale) {
  return ScaledHuman{ref, BoxMask(w, h, Box{0, 0, w, h}), scale};
}

TEST(Placement, OcclusionPropertyOverSeeds) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const auto spec = PlaceWithOcclusion(Human("a", 20, 40, 2.0), Human("b", 25, 30, 1.5), 320,
                                         240, rng);
    ASSERT_EQ(spec.humans.size(), 2u);
    EXPECT_TRUE(SatisfiesOcclusion(spec));
    const HumanPlacement& front = spec.humans[1];
    const HumanPlacement& back = spec.humans[0];
    EXPECT_GT(front.z_order, back.z_order);
    EXPECT_GT(front.box.Bottom(), back.box.Bottom());
    EXPECT_GT(IntersectionArea(front.box, back.box), 0);
  }
}

TEST(Placement, SmallHumansOnLargeCanvasAlwaysPlace) {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    Rng rng(seed);
    const auto spec =
        PlaceWithOcclusion(Human("a", 8, 10, 1.0), Human("b", 9, 12, 1.0), 640, 480, rng);
    EXPECT_TRUE(SatisfiesOcclusion(spec)) << "seed " << seed;
  }
}

TEST(Placement, OverlappingPositionsAreUniform) {
  // `a` fills the canvas, so every position of a 1x1 `b` overlaps it; only
  // the bottom row is excluded (equal bottoms). Positions must be uniform.
  Rng rng(24);
  std::vector<std::size_t> xs(10, 0);
  std::vector<std::size_t> ys(9, 0);
  const int n = 9000;
  for (int i = 0; i < n; ++i) {
    const auto spec =
        PlaceWithOcclusion(Human("a", 10, 10, 1.0), Human("b", 1, 1, 1.0), 10, 10, rng);
    for (const auto& h : spec.humans) {
      if (h.ref != "b") continue;
      ASSERT_LT(h.box.y, 9);
      ++xs[h.box.x];
      ++ys[h.box.y];
    }
  }
  EXPECT_LT(testing::ChiSquare(xs, n / 10.0), testing::ChiSquareCritical01(9));
  EXPECT_LT(testing::ChiSquare(ys, n / 9.0), testing::ChiSquareCritical01(8));
}

TEST(Placement, CentreRuleAndSizes) {
  Rng rng(21);
  PlacementOptions opts;
  opts.lower_rule = LowerRule::kCenterY;
  const auto spec =
      PlaceWithOcclusion(Human("a", 10, 10, 3.0), Human("b", 12, 8, 2.0), 100, 100, rng, opts);
  EXPECT_TRUE(SatisfiesOcclusion(spec, LowerRule::kCenterY));
  for (const auto& h : spec.humans) {
    if (h.ref == "a") EXPECT_EQ(h.box.w, 30);
    if (h.ref == "b") EXPECT_EQ(h.box.h, 16);
  }
}

TEST(Placement, TooLargeHumanIsAPlacementError) {
  Rng rng(22);
  EXPECT_EQ(CodeOf([&] { PlaceSingle(Human("a", 10, 10, 20.0), 100, 100, rng); }),
            ErrorCode::kPlacement);
  EXPECT_EQ(CodeOf([&] {
              PlaceWithOcclusion(Human("a", 10, 10, 1.0), Human("b", 10, 10, 20.0), 100, 100,
                                 rng);
            }),
            ErrorCode::kPlacement);
}

TEST(Placement, ImpossibleOcclusionExhaustsTries) {
  Rng rng(23);
  // Both fill the canvas height, so their bottoms always coincide.
  EXPECT_EQ(CodeOf([&] {
              PlaceWithOcclusion(Human("a", 10, 50, 1.0), Human("b", 10, 50, 1.0), 60, 50, rng);
            }),
            ErrorCode::kPlacement);
}

TEST(Placement, SingleStaysInsideCanvas) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const auto spec = PlaceSingle(Human("a", 13, 27, 1.7), 90, 70, rng, "mono:gray");
    ASSERT_EQ(spec.humans.size(), 1u);
    const Box& b = spec.humans[0].box;
    EXPECT_GE(b.x, 0);
    EXPECT_GE(b.y, 0);
    EXPECT_LE(b.Right(), 90);
    EXPECT_LE(b.Bottom(), 70);
    EXPECT_EQ(spec.background_ref, "mono:gray");
  }
}

TEST(Placement, MaskIoUIsBetweenZeroAndOne) {
  Rng rng(24);
  const ScaledHuman a = Human("a", 20, 30, 1.0);
  const ScaledHuman b = Human("b", 20, 30, 1.0);
  const auto spec = PlaceWithOcclusion(a, b, 80, 80, rng);
  const double iou = MaskIoU(spec, spec.humans[0].ref == "a" ? a.mask : b.mask,
                             spec.humans[1].ref == "a" ? a.mask : b.mask);
  EXPECT_GT(iou, 0.0);
  EXPECT_LT(iou, 1.0);
}

// ---- Adapters ----

TEST(MockStudio, UnknownRefHasNoEstimate) {
  MockStudio mock;
  EXPECT_FALSE(mock.Estimate("nope").has_value());
  EXPECT_EQ(CodeOf([] { MockOptions o; o.noise = -1.0; MockStudio m(o); }),
            ErrorCode::kInvalidArgument);
}

TEST(MockStudio, RenderDirWritesSilhouettes) {
  testing::TempDir dir;
  const TranslationManifest m = SmallPlan(1, 20, 25);
  MockOptions opts;
  opts.render_dir = dir.path();
  MockStudio mock(opts);
  const JobResult r = ExecuteJob(m.jobs[0], mock, mock);
  ASSERT_EQ(r.status, JobStatus::kOk);
  for (const StepResult& s : r.steps) {
    ASSERT_TRUE(std::filesystem::exists(s.generated_ref));
    std::ifstream in(s.generated_ref, std::ios::binary);
    const Raster img = ReadPpm(in);
    EXPECT_EQ(img.width, opts.render_width);
    EXPECT_FALSE(ExtractMask(img, kMidGray, 0.0).Empty());
  }
}

TEST(CommandAdapter, EchoScriptRoundTrips) {
  testing::TempDir dir;
  const auto script = dir / "adapter.sh";
  {
    std::ofstream out(script);
    out << "#!/bin/sh\ncp \"$2\" \"$3\"\necho \"gen://$(basename \"$2\")\"\n";
  }
  std::filesystem::permissions(script, std::filesystem::perms::owner_all);
  CommandAdapter adapter(script.string(), dir / "work");
  const TranslationManifest m = SmallPlan(1, 20, 26);
  const JobResult r = ExecuteJob(m.jobs[0], adapter, adapter);
  ASSERT_EQ(r.status, JobStatus::kOk) << r.failure_message;
  for (const StepResult& s : r.steps) {
    EXPECT_EQ(s.generated_ref.rfind("gen://", 0), 0u);
    ASSERT_TRUE(s.estimated2d.has_value());
    EXPECT_EQ(*s.estimated2d, s.target2d);
  }
}

TEST(CommandAdapter, NonZeroExitFailsTheJob) {
  testing::TempDir dir;
  CommandAdapter adapter("false", dir / "work");
  const TranslationManifest m = SmallPlan(1, 20, 27);
  const JobResult r = ExecuteJob(m.jobs[0], adapter, adapter);
  EXPECT_EQ(r.status, JobStatus::kFailed);
  EXPECT_EQ(r.failed_at, 1);
  EXPECT_TRUE(r.steps.empty());
}

}  // namespace
}  // namespace posediv
