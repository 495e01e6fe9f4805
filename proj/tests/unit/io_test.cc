// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "posediv/diffusion/synthetic_poses.h"
#include "posediv/error.h"
#include "posediv/io/config.h"
#include "posediv/io/formats.h"
#include "posediv/io/hash.h"
#include "posediv/io/stats.h"
#include "posediv/pipeline/adapters.h"
#include "posediv/pipeline/execute.h"
#include "posediv/pipeline/plan.h"
#include "support/fixtures.h"

namespace posediv {
namespace {

template <typename F>
Error ErrorOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected posediv::Error";
  return Error(ErrorCode::kIo, "none");
}

// ---- Config ----

TEST(Config, EmptyInputGivesDefaults) {
  for (const std::string text : {"", "  \n", "{}"}) {
    const PipelineConfig c = ParseConfig(text);
    EXPECT_EQ(c.t_sim, 0.24);
    EXPECT_EQ(c.n_pos, 1000);
    EXPECT_EQ(c.k, 2);
    EXPECT_EQ(c.n_max, 3);
    EXPECT_EQ(c.t_filt, 0.1);
    EXPECT_EQ(c.finals_per_source, 5);
    EXPECT_EQ(c.Hash(), PipelineConfig{}.Hash());
  }
}

TEST(Config, RangeErrorNamesTheField) {
  const Error e = ErrorOf([] { ParseConfig(R"({"t_sim": 2.5})"); });
  EXPECT_EQ(e.code(), ErrorCode::kRange);
  EXPECT_NE(std::string(e.what()).find("t_sim"), std::string::npos);
  EXPECT_EQ(ErrorOf([] { ParseConfig(R"({"n_max": 0})"); }).code(), ErrorCode::kRange);
  EXPECT_EQ(ErrorOf([] { ParseConfig(R"({"t_filt": -1})"); }).code(), ErrorCode::kRange);
  EXPECT_EQ(ErrorOf([] { ParseConfig(R"({"seed": -3})"); }).code(), ErrorCode::kRange);
}

TEST(Config, UnknownKeysTypesAndSyntaxAreParseErrors) {
  EXPECT_EQ(ErrorOf([] { ParseConfig(R"({"t_simm": 0.3})"); }).code(), ErrorCode::kParse);
  EXPECT_EQ(ErrorOf([] { ParseConfig(R"({"k": "two"})"); }).code(), ErrorCode::kParse);
  EXPECT_EQ(ErrorOf([] { ParseConfig(R"({"k": 2.5})"); }).code(), ErrorCode::kParse);
  EXPECT_EQ(ErrorOf([] { ParseConfig("{"); }).code(), ErrorCode::kParse);
  EXPECT_EQ(ErrorOf([] { ParseConfig("[1, 2]"); }).code(), ErrorCode::kParse);
  // A known key with an unsupported value is a range error.
  EXPECT_EQ(ErrorOf([] { ParseConfig(R"({"projection": "fisheye"})"); }).code(),
            ErrorCode::kRange);
}

TEST(Config, RoundTripAndHash) {
  const PipelineConfig c = ParseConfig(
      R"({"seed": 9, "t_sim": 0.3, "projection": "pinhole", "world_up": [0, 1, 0],
          "train_modes": ["squat_reach"], "mono_color": [10, 20, 30],
          "deep_regime": "projected_2d", "lower_rule": "center_y"})");
  const PipelineConfig back = ConfigFromJson(c.ToJson());
  EXPECT_EQ(back.ToJson(), c.ToJson());
  EXPECT_EQ(back.Hash(), c.Hash());
  EXPECT_EQ(c.Hash().size(), 16u);
  EXPECT_NE(c.Hash(), PipelineConfig{}.Hash());
  EXPECT_EQ(c.Metric().projection.mode, ProjectionMode::kPinhole);
  EXPECT_EQ(c.Search().deep_regime, DeepRegime::kProjected2D);
  EXPECT_EQ(c.Placement().lower_rule, LowerRule::kCenterY);
  EXPECT_EQ(c.NovelSet().t_sim, 0.3);
}

TEST(Config, LoadFromFile) {
  testing::TempDir dir;
  WriteTextFile(dir / "c.json", R"({"n_pos": 12})");
  EXPECT_EQ(LoadConfig(dir / "c.json").n_pos, 12);
  EXPECT_EQ(ErrorOf([&] { LoadConfig(dir / "missing.json"); }).code(), ErrorCode::kIo);
}

TEST(Hash, CanonicalFormIgnoresKeyOrder) {
  const auto a = nlohmann::json::parse(R"({"b": 1, "a": [1, 2]})");
  const auto b = nlohmann::json::parse(R"({"a": [1, 2], "b": 1})");
  EXPECT_EQ(CanonicalJson(a), CanonicalJson(b));
  EXPECT_EQ(ConfigHash(a), ConfigHash(b));
  EXPECT_EQ(Hex64(0xabcULL), "0000000000000abc");
}

// ---- Pose documents ----

TEST(PoseDocument, ThreeDRoundTripWithIdsAndCameras) {
  Rng rng(1);
  std::vector<Pose3D> poses;
  for (int i = 0; i < 4; ++i) poses.push_back(testing::GaussianPose(rng));
  PoseDocument doc = MakePoseDocument(poses);
  doc.ids = {"a", "b", "c", "d"};
  doc.cameras = {testing::RandomCamera(rng), std::nullopt, CameraPose{}, std::nullopt};
  doc.metadata = {{"note", "x"}};
  testing::TempDir dir;
  WritePoseDocument(dir / "p.json", doc);
  const PoseDocument back = ReadPoseDocument(dir / "p.json");
  EXPECT_EQ(back, doc);
  EXPECT_EQ(Poses3D(back), poses);
}

TEST(PoseDocument, TwoDRoundTripAndDimensionChecks) {
  Rng rng(2);
  const std::vector<Pose2D> poses = {testing::GaussianPose2D(rng), testing::GaussianPose2D(rng)};
  const PoseDocument doc = MakePoseDocument(poses);
  const PoseDocument back = PoseDocumentFromJson(ToJson(doc));
  EXPECT_EQ(back, doc);
  EXPECT_EQ(Poses2D(back), poses);
  EXPECT_THROW(Poses3D(back), Error);
}

TEST(PoseDocument, RejectsWrongSchemaAndShape) {
  Rng rng(3);
  nlohmann::json j = ToJson(MakePoseDocument(std::vector<Pose3D>{testing::GaussianPose(rng)}));
  nlohmann::json bad_schema = j;
  bad_schema["schema"] = "posediv.poses/2";
  EXPECT_EQ(ErrorOf([&] { PoseDocumentFromJson(bad_schema); }).code(), ErrorCode::kParse);
  nlohmann::json bad_shape = j;
  bad_shape["poses"][0]["joints"].erase(0);
  EXPECT_EQ(ErrorOf([&] { PoseDocumentFromJson(bad_shape); }).code(), ErrorCode::kParse);
  nlohmann::json bad_names = j;
  bad_names["joints"][0] = "tail";
  EXPECT_EQ(ErrorOf([&] { PoseDocumentFromJson(bad_names); }).code(), ErrorCode::kParse);
}

TEST(NovelSetDocument, RoundTripKeepsConfigAndProvenance) {
  Rng rng(4);
  NovelSetConfig cfg;
  cfg.n_pos = 10;
  cfg.t_sim = 0.3;
  NovelPoseSet set(cfg, {}, SetProvenance{77, "linear:10:0.0001:0.02"});
  for (int i = 0; i < 5; ++i) set.AppendUnchecked(testing::PlausiblePose(rng));
  const PoseDocument doc = NovelSetDocument(set, "0123456789abcdef");
  EXPECT_EQ(doc.metadata["config_hash"], "0123456789abcdef");
  const NovelPoseSet back = NovelSetFromDocument(PoseDocumentFromJson(ToJson(doc)), {});
  EXPECT_EQ(back.poses(), set.poses());
  EXPECT_EQ(back.config(), set.config());
  EXPECT_EQ(back.provenance(), set.provenance());
}

// ---- Sources and JSONL ----

TEST(Sources, RoundTrip) {
  Rng rng(5);
  const auto sources = testing::RandomSources(3, rng);
  testing::TempDir dir;
  WriteSources(dir / "s.json", sources);
  const auto back = ReadSources(dir / "s.json");
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(back[i].image_ref, sources[i].image_ref);
    EXPECT_EQ(back[i].estimated_pose, sources[i].estimated_pose);
    EXPECT_EQ(back[i].camera, sources[i].camera);
    EXPECT_EQ(back[i].human_mask_ref, sources[i].human_mask_ref);
    EXPECT_EQ(back[i].size, sources[i].size);
  }
}

TranslationManifest SamplePlan() {
  Rng rng(6);
  const NovelPoseSet set = testing::RandomSet(15, rng);
  const auto sources = testing::RandomSources(2, rng);
  PlanOptions opts;
  opts.seed = 6;
  opts.config_hash = PipelineConfig{}.Hash();
  opts.config_json = CanonicalJson(PipelineConfig{}.ToJson());
  TranslationManifest m = PlanManifest(sources, set, opts);
  m.failures.push_back({"broken.png", "projection", "behind camera"});
  return m;
}

TEST(Manifest, RoundTripIsByteStable) {
  const TranslationManifest m = SamplePlan();
  std::ostringstream first;
  WriteManifest(first, m);
  std::istringstream in(first.str());
  const TranslationManifest back = ReadManifest(in);
  std::ostringstream second;
  WriteManifest(second, back);
  EXPECT_EQ(first.str(), second.str());
  EXPECT_EQ(back.jobs.size(), m.jobs.size());
  EXPECT_EQ(back.failures.size(), 1u);
  EXPECT_EQ(back.config_hash, m.config_hash);
  EXPECT_EQ(first.str().rfind("{", 0), 0u);
  EXPECT_NE(first.str().find(kManifestSchema), std::string::npos);
}

TEST(Manifest, RejectsTruncatedFile) {
  std::ostringstream out;
  WriteManifest(out, SamplePlan());
  std::string text = out.str();
  text = text.substr(0, text.rfind('\n', text.size() - 2) + 1);
  std::istringstream in(text);
  EXPECT_EQ(ErrorOf([&] { ReadManifest(in); }).code(), ErrorCode::kParse);
  std::istringstream empty("");
  EXPECT_EQ(ErrorOf([&] { ReadManifest(empty); }).code(), ErrorCode::kParse);
}

TEST(Results, RoundTripIncludingFailuresAndMissingEstimates) {
  const TranslationManifest m = SamplePlan();
  MockOptions opts;
  opts.noise = 0.1;
  MockStudio mock(opts);
  ResultsFile file{6, "hash", ExecuteManifest(m, mock, mock)};
  file.results[0].status = JobStatus::kFailed;
  file.results[0].failed_at = 2;
  file.results[0].failure_message = "boom";
  file.results[1].steps[0].estimated2d.reset();
  std::ostringstream out;
  WriteResults(out, file);
  std::istringstream in(out.str());
  const ResultsFile back = ReadResults(in);
  std::ostringstream again;
  WriteResults(again, back);
  EXPECT_EQ(out.str(), again.str());
  EXPECT_EQ(back.results[0].status, JobStatus::kFailed);
  EXPECT_FALSE(back.results[1].steps[0].estimated2d.has_value());
  EXPECT_EQ(back.results[2].steps[0].estimated2d, file.results[2].steps[0].estimated2d);
}

TEST(FilterReport, RoundTrip) {
  FilterFile f{3, "h", 0.1, {}};
  f.decisions.push_back({"j", 1, "r1", 0.05, true, ""});
  f.decisions.push_back({"j", 2, "r2", std::nullopt, false, "no_estimate"});
  f.decisions.push_back({"j", 3, "r3", 0.3, false, "distance_above_threshold"});
  std::ostringstream out;
  WriteFilterReport(out, f);
  std::istringstream in(out.str());
  const FilterFile back = ReadFilterReport(in);
  EXPECT_EQ(back.decisions, f.decisions);
  EXPECT_EQ(back.t_filt, 0.1);
  std::istringstream wrong(R"({"schema":"posediv.results/1","seed":0,"config_hash":"","count":0})"
                           "\n");
  EXPECT_EQ(ErrorOf([&] { ReadFilterReport(wrong); }).code(), ErrorCode::kParse);
}

TEST(Placements, RoundTrip) {
  PlacementFile f{4, "h", {}};
  f.specs.push_back(PlacementSpec{"mono:gray", 640, 480,
                                  {HumanPlacement{"a", Box{1, 2, 3, 4}, 1.5, 0},
                                   HumanPlacement{"b", Box{2, 3, 4, 5}, 0.5, 1}}});
  std::ostringstream out;
  WritePlacements(out, f);
  std::istringstream in(out.str());
  EXPECT_EQ(ReadPlacements(in).specs, f.specs);
}

TEST(Denoiser, RoundTripIsExact) {
  const ToyDenoiser net = ToyDenoiser::Initialized(9, 3);
  testing::TempDir dir;
  WriteDenoiser(dir / "d.json", net, {{"note", "test"}});
  EXPECT_EQ(ReadDenoiser(dir / "d.json"), net);
}

// ---- Images and tables ----

TEST(Pbm, RoundTrip) {
  BinaryMask m(5, 3);
  m.Set(0, 0, true);
  m.Set(4, 2, true);
  std::ostringstream out;
  WritePbm(out, m);
  EXPECT_EQ(out.str().rfind("P1", 0), 0u);
  std::istringstream in(out.str());
  EXPECT_EQ(ReadPbm(in), m);
}

TEST(Ppm, PlainAndBinaryRoundTrip) {
  Raster r(4, 3, kMidGray);
  r.at(1, 2) = Rgb{1, 2, 255};
  for (bool binary : {false, true}) {
    std::ostringstream out;
    WritePpm(out, r, binary);
    EXPECT_EQ(out.str().substr(0, 2), binary ? "P6" : "P3");
    std::istringstream in(out.str());
    EXPECT_EQ(ReadPpm(in), r);
  }
  std::istringstream junk("P5\n1 1\n255\n\0");
  EXPECT_EQ(ErrorOf([&] { ReadPpm(junk); }).code(), ErrorCode::kParse);
}

TEST(SizeTable, RoundTripAndValidation) {
  const std::vector<SizeEntry> t = {{30, 40}, {12, 7}};
  std::ostringstream out;
  WriteSizeTable(out, t);
  std::istringstream in(out.str());
  EXPECT_EQ(ReadSizeTable(in), t);
  std::istringstream bad("# posediv.sizes/1\nwidth,height\n3,x\n");
  EXPECT_EQ(ErrorOf([&] { ReadSizeTable(bad); }).code(), ErrorCode::kParse);
}

// ---- Stats ----

TEST(Stats, CountsHistogramAndCsv) {
  std::vector<FilterDecision> d = {{"j", 1, "a", 0.05, true, ""},
                                   {"j", 2, "b", 0.15, false, "distance_above_threshold"},
                                   {"j", 3, "c", std::nullopt, false, "no_estimate"},
                                   {"j", 4, "d", 2.0, false, "distance_above_threshold"}};
  RunStats s;
  AddFilterCounts(d, &s);
  EXPECT_EQ(s.generated, 4u);
  EXPECT_EQ(s.kept, 1u);
  EXPECT_EQ(s.filtered, 3u);
  EXPECT_NO_THROW(s.Validate());
  EXPECT_EQ(HistogramBucket(0.0), 0);
  EXPECT_EQ(HistogramBucket(0.1), 1);
  EXPECT_EQ(HistogramBucket(2.0), 19);
  std::ostringstream csv;
  WriteStatsCsv(csv, s);
  EXPECT_EQ(csv.str().rfind("# posediv.stats/1", 0), 0u);
  EXPECT_NE(csv.str().find("kept"), std::string::npos);
  s.kept = 4;
  EXPECT_THROW(s.Validate(), Error);
}

TEST(Stats, DiversityHistogramCoversEveryPair) {
  Rng rng(7);
  const NovelPoseSet set = testing::RandomSet(9, rng);
  RunStats s;
  AddSetDiversity(set, &s);
  std::size_t total = 0;
  for (std::size_t c : s.histogram) total += c;
  EXPECT_EQ(total, 36u);
  EXPECT_EQ(s.set_size, 9u);
  ASSERT_TRUE(s.min_pairwise.has_value());
  EXPECT_EQ(*s.min_pairwise, MinPairwiseDistance(set));
  EXPECT_GE(s.histogram[HistogramBucket(*s.min_pairwise)], 1u);
}

TEST(Stats, TimingLog) {
  testing::TempDir dir;
  const std::string path = (dir / "t.log").string();
  AppendTiming(path, "plan", 0.5);
  AppendTiming(path, "run", 1.25);
  std::istringstream in(ReadTextFile(path));
  const auto t = ReadTimings(in);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[1].first, "run");
  EXPECT_DOUBLE_EQ(t[1].second, 1.25);
}

}  // namespace
}  // namespace posediv
