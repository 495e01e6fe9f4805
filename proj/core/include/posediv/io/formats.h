// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "posediv/diffusion/toy_denoiser.h"
#include "posediv/novelset/novel_pose_set.h"
#include "posediv/pipeline/filter.h"
#include "posediv/pipeline/placement.h"
#include "posediv/pipeline/records.h"

namespace posediv {

// Leading schema tags. Readers reject any other tag.
inline constexpr const char* kPoseSchema = "posediv.poses/1";
inline constexpr const char* kSourcesSchema = "posediv.sources/1";
inline constexpr const char* kManifestSchema = "posediv.manifest/1";
inline constexpr const char* kResultsSchema = "posediv.results/1";
inline constexpr const char* kFilterSchema = "posediv.filter/1";
inline constexpr const char* kPlacementSchema = "posediv.placements/1";
inline constexpr const char* kDenoiserSchema = "posediv.denoiser/1";
inline constexpr const char* kSizeTableSchema = "posediv.sizes/1";

// ---- JSON building blocks ----

nlohmann::json ToJson(const Pose3D& pose);
nlohmann::json ToJson(const Pose2D& pose);
nlohmann::json ToJson(const CameraPose& camera);
Pose3D Pose3DFromJson(const nlohmann::json& j);
Pose2D Pose2DFromJson(const nlohmann::json& j);
CameraPose CameraFromJson(const nlohmann::json& j);

// ---- Pose documents ----

std::vector<std::string> DefaultJointNames();

// A pose file: skeleton header, K x dim arrays, optional per-pose ids and
// cameras, and free-form metadata (config snapshot, provenance).
struct PoseDocument {
  std::string skeleton = "human36m";
  std::vector<std::string> joint_names = DefaultJointNames();
  int dim = 3;
  std::vector<Eigen::MatrixXd> poses;  // each kNumJoints x dim
  std::vector<std::string> ids;        // empty or one per pose
  std::vector<std::optional<CameraPose>> cameras;  // empty or one per pose
  nlohmann::json metadata = nlohmann::json::object();

  friend bool operator==(const PoseDocument&, const PoseDocument&);
};

PoseDocument MakePoseDocument(const std::vector<Pose3D>& poses);
PoseDocument MakePoseDocument(const std::vector<Pose2D>& poses);
std::vector<Pose3D> Poses3D(const PoseDocument& doc);
std::vector<Pose2D> Poses2D(const PoseDocument& doc);

nlohmann::json ToJson(const PoseDocument& doc);
PoseDocument PoseDocumentFromJson(const nlohmann::json& j);
void WritePoseDocument(const std::filesystem::path& path, const PoseDocument& doc);
PoseDocument ReadPoseDocument(const std::filesystem::path& path);

// A novel pose set persisted as a pose document; its config and provenance
// live in the metadata.
PoseDocument NovelSetDocument(const NovelPoseSet& set, const std::string& config_hash);
NovelPoseSet NovelSetFromDocument(const PoseDocument& doc, const MetricContext& metric);

// ---- Sources ----

nlohmann::json ToJson(const SourceRecord& source);
SourceRecord SourceFromJson(const nlohmann::json& j);
void WriteSources(const std::filesystem::path& path,
                  const std::vector<SourceRecord>& sources);
std::vector<SourceRecord> ReadSources(const std::filesystem::path& path);

// ---- Line-delimited records ----
//
// Every JSONL file starts with a header line {"schema": ..., "seed": ...,
// "config_hash": ..., ...}; each following line is one record.

void WriteManifest(std::ostream& out, const TranslationManifest& manifest);
TranslationManifest ReadManifest(std::istream& in);

struct ResultsFile {
  std::uint64_t seed = 0;
  std::string config_hash;
  std::vector<JobResult> results;
};
void WriteResults(std::ostream& out, const ResultsFile& results);
ResultsFile ReadResults(std::istream& in);

struct FilterFile {
  std::uint64_t seed = 0;
  std::string config_hash;
  double t_filt = 0.1;
  std::vector<FilterDecision> decisions;
};
void WriteFilterReport(std::ostream& out, const FilterFile& report);
FilterFile ReadFilterReport(std::istream& in);

struct PlacementFile {
  std::uint64_t seed = 0;
  std::string config_hash;
  std::vector<PlacementSpec> specs;
};
void WritePlacements(std::ostream& out, const PlacementFile& placements);
PlacementFile ReadPlacements(std::istream& in);

// ---- Denoiser parameters ----

void WriteDenoiser(const std::filesystem::path& path, const ToyDenoiser& denoiser,
                   const nlohmann::json& metadata = nlohmann::json::object());
ToyDenoiser ReadDenoiser(const std::filesystem::path& path);

// ---- Images ----

// Plain PBM (P1); 1 = foreground.
void WritePbm(std::ostream& out, const BinaryMask& mask);
BinaryMask ReadPbm(std::istream& in);
// PPM, plain (P3) or raw (P6), maxval 255.
void WritePpm(std::ostream& out, const Raster& raster, bool binary = true);
Raster ReadPpm(std::istream& in);

// ---- Size table ----
//
// CSV with a "# posediv.sizes/1" line, a "width,height" header and one row
// per entry.
void WriteSizeTable(std::ostream& out, const std::vector<SizeEntry>& table);
std::vector<SizeEntry> ReadSizeTable(std::istream& in);

// ---- Small file helpers ----

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, const std::string& text);

}  // namespace posediv
