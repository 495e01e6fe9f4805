// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

// posediv: command-line front end for the pose-diversification pipeline.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "posediv/diffusion/sampler.h"
#include "posediv/diffusion/synthetic_poses.h"
#include "posediv/diffusion/training.h"
#include "posediv/error.h"
#include "posediv/io/config.h"
#include "posediv/io/formats.h"
#include "posediv/io/hash.h"
#include "posediv/io/stats.h"
#include "posediv/pipeline/execute.h"
#include "posediv/pipeline/filter.h"
#include "posediv/pipeline/mask.h"
#include "posediv/pipeline/placement.h"
#include "posediv/pipeline/plan.h"
#include "posediv/pipeline/raster.h"
#include "posediv/pipeline/seeding.h"

namespace posediv {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Common {
  std::string config_path;
  std::string timings_path;

  PipelineConfig Config() const {
    return config_path.empty() ? ParseConfig("") : LoadConfig(config_path);
  }
};

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  return out;
}

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return in;
}

void Warn(const std::string& message) { std::cerr << "posediv: warning: " << message << '\n'; }

void CheckHash(const std::string& what, const std::string& found, const PipelineConfig& c) {
  if (found != c.Hash()) {
    Warn(what + " was produced under config " + found + ", current config is " + c.Hash());
  }
}

// ---- gen-poses ----

struct GenPosesArgs {
  std::string out;
  int count = 100;
  std::string denoiser_in;
  std::string denoiser_out;
};

void GenPoses(const Common& common, const GenPosesArgs& args) {
  const PipelineConfig config = common.Config();
  if (args.count < 1) throw Error(ErrorCode::kInvalidArgument, "--count must be >= 1");
  const NoiseSchedule schedule = config.Schedule();
  json metadata = {{"config_hash", config.Hash()}, {"schedule_id", schedule.Id()}};

  std::optional<ToyDenoiser> denoiser;
  if (!args.denoiser_in.empty()) {
    denoiser = ReadDenoiser(args.denoiser_in);
    metadata["denoiser"] = args.denoiser_in;
  } else {
    std::vector<Pose3D> modes;
    for (CanonicalPoseKind k : config.train_modes) modes.push_back(CanonicalPose(k));
    Rng data_rng(DeriveSeed(config.seed, "dataset"));
    const std::vector<Pose3D> dataset =
        GaussianMixtureDataset(modes, config.train_sigma, config.train_samples, data_rng);
    TrainingResult trained = TrainToyDenoiser(dataset, schedule, config.Training());
    metadata["initial_loss"] = trained.initial_loss;
    metadata["final_loss"] = trained.final_loss;
    denoiser = std::move(trained.denoiser);
    if (!args.denoiser_out.empty()) {
      WriteDenoiser(args.denoiser_out, *denoiser,
                    {{"config_hash", config.Hash()}, {"schedule_id", schedule.Id()}});
    }
  }

  const std::uint64_t sample_seed = DeriveSeed(config.seed, "sample");
  Rng rng(sample_seed);
  std::vector<Pose3D> poses;
  poses.reserve(args.count);
  for (int i = 0; i < args.count; ++i) poses.push_back(SamplePose(*denoiser, schedule, rng));
  PoseDocument doc = MakePoseDocument(poses);
  metadata["generator_seed"] = sample_seed;
  doc.metadata = std::move(metadata);
  WritePoseDocument(args.out, doc);
}

// ---- build-set ----

struct BuildSetArgs {
  std::string out;
  std::string poses;
  std::string denoiser;
  bool allow_partial = false;
};

void BuildSet(const Common& common, const BuildSetArgs& args) {
  const PipelineConfig config = common.Config();
  const NovelSetConfig set_config = config.NovelSet();
  const MetricContext metric = config.Metric();
  const std::uint64_t seed = DeriveSeed(config.seed, "build-set");
  Rng rng(seed);

  std::optional<NovelPoseSet> set;
  if (config.generator == GeneratorKind::kPool) {
    if (args.poses.empty()) throw Error(ErrorCode::kInvalidArgument, "generator 'pool' needs --poses");
    const PoseDocument pool = ReadPoseDocument(args.poses);
    std::string schedule_id;
    if (pool.metadata.contains("schedule_id")) {
      schedule_id = pool.metadata.at("schedule_id").get<std::string>();
    }
    std::uint64_t pool_seed = 0;
    if (pool.metadata.contains("generator_seed")) {
      pool_seed = pool.metadata.at("generator_seed").get<std::uint64_t>();
    }
    set.emplace(set_config, metric, SetProvenance{pool_seed, schedule_id});
    for (const Pose3D& p : Poses3D(pool)) {
      if (set->full()) break;
      set->Admit(p);
    }
    if (!set->full() && !args.allow_partial) {
      throw Error(ErrorCode::kBudgetExhausted,
                  "pose pool exhausted with " + std::to_string(set->size()) + " of " +
                      std::to_string(set_config.n_pos) + " poses admitted");
    }
  } else {
    PoseGenerator generator;
    SetProvenance provenance{seed, "articulated"};
    std::optional<ToyDenoiser> denoiser;
    const NoiseSchedule schedule = config.Schedule();
    if (config.generator == GeneratorKind::kDenoiser) {
      if (args.denoiser.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "generator 'denoiser' needs --denoiser");
      }
      denoiser = ReadDenoiser(args.denoiser);
      provenance.schedule_id = schedule.Id();
      generator = [&](Rng& r) { return SamplePose(*denoiser, schedule, r); };
    } else {
      const std::vector<CanonicalPoseKind> kinds = config.train_modes;
      const double angle = config.max_bone_angle;
      generator = [kinds, angle](Rng& r) {
        std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1);
        return RandomArticulatedPose(r, angle, kinds[pick(r)]);
      };
    }
    try {
      set = BuildNovelSet(generator, set_config, rng, metric, provenance);
    } catch (const BudgetExhaustedError& e) {
      if (!args.allow_partial) throw;
      Warn(e.what());
      set = e.partial();
    }
  }
  WritePoseDocument(args.out, NovelSetDocument(*set, config.Hash()));
}

// ---- plan ----

struct PlanArgs {
  std::string set;
  std::string sources;
  std::string out;
};

void Plan(const Common& common, const PlanArgs& args) {
  const PipelineConfig config = common.Config();
  const PoseDocument set_doc = ReadPoseDocument(args.set);
  if (set_doc.metadata.contains("config_hash")) {
    CheckHash("pose set", set_doc.metadata.at("config_hash").get<std::string>(), config);
  }
  const NovelPoseSet set = NovelSetFromDocument(set_doc, config.Metric());
  const std::vector<SourceRecord> sources = ReadSources(args.sources);
  PlanOptions options;
  options.seed = config.seed;
  options.search = config.Search();
  options.config_hash = config.Hash();
  options.config_json = CanonicalJson(config.ToJson());
  const TranslationManifest manifest = PlanManifest(sources, set, options);
  for (const PlanFailure& f : manifest.failures) {
    Warn("planning failed for " + f.source_ref + ": " + f.message);
  }
  std::ofstream out = OpenOut(args.out);
  WriteManifest(out, manifest);
}

// ---- run ----

struct RunArgs {
  std::string manifest;
  std::string out;
  std::string render_dir;
  std::string work_dir;
};

void Run(const Common& common, const RunArgs& args) {
  const PipelineConfig config = common.Config();
  std::ifstream in = OpenIn(args.manifest);
  const TranslationManifest manifest = ReadManifest(in);
  CheckHash("manifest", manifest.config_hash, config);

  std::vector<JobResult> results;
  if (config.adapter == AdapterKind::kMock) {
    MockOptions options = config.Mock();
    if (!args.render_dir.empty()) {
      fs::create_directories(args.render_dir);
      options.render_dir = args.render_dir;
    }
    MockStudio studio(options);
    results = ExecuteManifest(manifest, studio, studio, config.workers);
  } else {
    const std::string work = args.work_dir.empty() ? args.out + ".work" : args.work_dir;
    CommandAdapter adapter(config.adapter_command, work);
    results = ExecuteManifest(manifest, adapter, adapter, config.workers);
  }
  std::ofstream out = OpenOut(args.out);
  WriteResults(out, ResultsFile{manifest.seed, config.Hash(), std::move(results)});
}

// ---- filter ----

struct FilterArgs {
  std::string results;
  std::string out;
};

void Filter(const Common& common, const FilterArgs& args) {
  const PipelineConfig config = common.Config();
  std::ifstream in = OpenIn(args.results);
  const ResultsFile results = ReadResults(in);
  CheckHash("results", results.config_hash, config);
  FilterFile report{results.seed, config.Hash(), config.t_filt,
                    FilterNoisy(results.results, config.t_filt, config.Metric())};
  std::ofstream out = OpenOut(args.out);
  WriteFilterReport(out, report);
}

// ---- compose ----

struct ComposeArgs {
  std::string results;
  std::string filter;
  std::string sizes;
  std::string out;
  std::string masks_dir;
  std::string backgrounds;
};

BinaryMask GeneratedMask(const StepResult& step, const PipelineConfig& config) {
  Raster raster;
  std::error_code ec;
  if (fs::is_regular_file(step.generated_ref, ec)) {
    std::ifstream in = OpenIn(step.generated_ref);
    raster = ReadPpm(in);
  } else if (step.estimated2d) {
    raster = RenderSilhouette(*step.estimated2d, config.render_width, config.render_height,
                              config.mono_color, MockOptions{}.foreground);
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "no image or pose available for " + step.generated_ref);
  }
  return MorphCleanup(ExtractMask(raster, config.mono_color, config.mask_tolerance));
}

void Compose(const Common& common, const ComposeArgs& args) {
  const PipelineConfig config = common.Config();
  std::ifstream results_in = OpenIn(args.results);
  const ResultsFile results = ReadResults(results_in);
  std::ifstream filter_in = OpenIn(args.filter);
  const FilterFile report = ReadFilterReport(filter_in);
  std::ifstream sizes_in = OpenIn(args.sizes);
  const std::vector<SizeEntry> sizes = ReadSizeTable(sizes_in);
  CheckHash("filter report", report.config_hash, config);

  std::vector<std::string> backgrounds;
  if (!args.backgrounds.empty()) {
    std::ifstream bg = OpenIn(args.backgrounds);
    for (std::string line; std::getline(bg, line);) {
      if (!line.empty() && line[0] != '#') backgrounds.push_back(line);
    }
  }
  if (backgrounds.empty()) backgrounds.push_back("mono:gray");
  if (!args.masks_dir.empty()) fs::create_directories(args.masks_dir);

  std::map<std::pair<std::string, int>, const StepResult*> steps;
  for (const JobResult& r : results.results) {
    for (const StepResult& s : r.steps) steps[{r.job_id, s.step}] = &s;
  }

  Rng rng(DeriveSeed(config.seed, "compose"));
  std::vector<ScaledHuman> humans;
  for (const FilterDecision& d : report.decisions) {
    if (!d.kept) continue;
    const auto it = steps.find({d.job_id, d.step});
    if (it == steps.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "filter report names a step missing from the results: " + d.generated_ref);
    }
    BinaryMask mask = GeneratedMask(*it->second, config);
    if (mask.Empty()) {
      Warn("empty mask for " + d.generated_ref + ", skipped");
      continue;
    }
    if (!args.masks_dir.empty()) {
      const fs::path path = fs::path(args.masks_dir) /
                            (Hex64(Fnv1a64(d.generated_ref)) + ".pbm");
      std::ofstream out = OpenOut(path.string());
      WritePbm(out, mask);
    }
    const double scale = ResizeFactor(mask, sizes, rng);
    humans.push_back(ScaledHuman{d.generated_ref, std::move(mask), scale});
  }

  std::uniform_int_distribution<std::size_t> pick_bg(0, backgrounds.size() - 1);
  PlacementFile file{results.seed, config.Hash(), {}};
  std::size_t i = 0;
  while (i < humans.size()) {
    const std::string& bg = backgrounds[pick_bg(rng)];
    if (config.occlusion && i + 1 < humans.size()) {
      file.specs.push_back(PlaceWithOcclusion(humans[i], humans[i + 1], config.canvas_width,
                                              config.canvas_height, rng, config.Placement(),
                                              bg));
      i += 2;
    } else {
      file.specs.push_back(
          PlaceSingle(humans[i], config.canvas_width, config.canvas_height, rng, bg));
      i += 1;
    }
  }
  std::ofstream out = OpenOut(args.out);
  WritePlacements(out, file);
}

// ---- stats ----

struct StatsArgs {
  std::string set;
  std::string filter;
  std::string timings;
  std::string out;
};

void Stats(const Common& common, const StatsArgs& args) {
  const PipelineConfig config = common.Config();
  RunStats stats;
  if (!args.set.empty()) {
    AddSetDiversity(NovelSetFromDocument(ReadPoseDocument(args.set), config.Metric()), &stats);
  }
  if (!args.filter.empty()) {
    std::ifstream in = OpenIn(args.filter);
    const FilterFile report = ReadFilterReport(in);
    AddFilterCounts(report.decisions, &stats);
  }
  if (!args.timings.empty()) {
    std::ifstream in = OpenIn(args.timings);
    stats.timings = ReadTimings(in);
  }
  if (args.out.empty()) {
    WriteStatsCsv(std::cout, stats);
  } else {
    std::ofstream out = OpenOut(args.out);
    WriteStatsCsv(out, stats);
  }
}

// Runs one stage, timing it and turning errors into a JSON record on stderr.
int RunStage(const std::string& stage, const Common& common, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const Error& e) {
    std::cerr << json{{"stage", stage}, {"code", ErrorCodeName(e.code())}, {"message", e.what()}}
                     .dump()
              << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"stage", stage}, {"code", "internal"}, {"message", e.what()}}.dump()
              << '\n';
    return 1;
  }
  if (!common.timings_path.empty()) {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    try {
      AppendTiming(common.timings_path, stage, seconds);
    } catch (const Error& e) {
      Warn(e.what());
    }
  }
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"posediv: pose-diversified synthetic dataset pipeline"};
  app.require_subcommand(1);
  Common common;
  app.add_option("-c,--config", common.config_path, "Pipeline config (JSON)")->check(CLI::ExistingFile);
  app.add_option("--timings", common.timings_path, "Append stage timings to this CSV");

  GenPosesArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-poses", "Train (or load) the toy pose diffusion model and sample poses");
  gen_cmd->add_option("-o,--out", gen.out, "Output pose file")->required();
  gen_cmd->add_option("-n,--count", gen.count, "Number of poses to sample");
  gen_cmd->add_option("--denoiser", gen.denoiser_in, "Load a trained denoiser instead of training")
      ->check(CLI::ExistingFile);
  gen_cmd->add_option("--save-denoiser", gen.denoiser_out, "Write the trained denoiser here");

  BuildSetArgs build;
  auto* build_cmd = app.add_subcommand("build-set", "Build a diversity-constrained novel pose set");
  build_cmd->add_option("-o,--out", build.out, "Output set file")->required();
  build_cmd->add_option("--poses", build.poses, "Candidate pool (generator = pool)")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--denoiser", build.denoiser, "Trained denoiser (generator = denoiser)")
      ->check(CLI::ExistingFile);
  build_cmd->add_flag("--allow-partial", build.allow_partial,
                      "Write the partial set instead of failing when the budget runs out");

  PlanArgs plan;
  auto* plan_cmd = app.add_subcommand("plan", "Plan translation jobs for each source");
  plan_cmd->add_option("--set", plan.set, "Novel pose set")->required()->check(CLI::ExistingFile);
  plan_cmd->add_option("--sources", plan.sources, "Source records")->required()->check(CLI::ExistingFile);
  plan_cmd->add_option("-o,--out", plan.out, "Output manifest (JSONL)")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Execute a manifest through the translator adapter");
  run_cmd->add_option("--manifest", run.manifest, "Manifest (JSONL)")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("-o,--out", run.out, "Output results (JSONL)")->required();
  run_cmd->add_option("--render-dir", run.render_dir, "Mock adapter: write silhouettes here");
  run_cmd->add_option("--work-dir", run.work_dir, "Command adapter: scratch directory");

  FilterArgs filter;
  auto* filter_cmd = app.add_subcommand("filter", "Reject generated steps whose pose drifted");
  filter_cmd->add_option("--results", filter.results, "Results (JSONL)")->required()->check(CLI::ExistingFile);
  filter_cmd->add_option("-o,--out", filter.out, "Output filter report (JSONL)")->required();

  ComposeArgs compose;
  auto* compose_cmd = app.add_subcommand("compose", "Masks, resizing and placement specs");
  compose_cmd->add_option("--results", compose.results, "Results (JSONL)")->required()->check(CLI::ExistingFile);
  compose_cmd->add_option("--filter", compose.filter, "Filter report (JSONL)")->required()->check(CLI::ExistingFile);
  compose_cmd->add_option("--sizes", compose.sizes, "Size table (CSV)")->required()->check(CLI::ExistingFile);
  compose_cmd->add_option("-o,--out", compose.out, "Output placement specs (JSONL)")->required();
  compose_cmd->add_option("--masks-dir", compose.masks_dir, "Write cleaned masks (PBM) here");
  compose_cmd->add_option("--backgrounds", compose.backgrounds, "Background refs, one per line")
      ->check(CLI::ExistingFile);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Run statistics as CSV");
  stats_cmd->add_option("--set", stats.set, "Novel pose set")->check(CLI::ExistingFile);
  stats_cmd->add_option("--filter", stats.filter, "Filter report (JSONL)")->check(CLI::ExistingFile);
  stats_cmd->add_option("--timings", stats.timings, "Timing log written by --timings")
      ->check(CLI::ExistingFile);
  stats_cmd->add_option("-o,--out", stats.out, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*gen_cmd) return RunStage("gen-poses", common, [&] { GenPoses(common, gen); });
  if (*build_cmd) return RunStage("build-set", common, [&] { BuildSet(common, build); });
  if (*plan_cmd) return RunStage("plan", common, [&] { Plan(common, plan); });
  if (*run_cmd) return RunStage("run", common, [&] { Run(common, run); });
  if (*filter_cmd) return RunStage("filter", common, [&] { Filter(common, filter); });
  if (*compose_cmd) return RunStage("compose", common, [&] { Compose(common, compose); });
  if (*stats_cmd) return RunStage("stats", common, [&] { Stats(common, stats); });
  return 2;
}

}  // namespace
}  // namespace posediv

int main(int argc, char** argv) { return posediv::Main(argc, argv); }
