// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/io/formats.h"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "posediv/error.h"

namespace posediv {
namespace {

using nlohmann::json;

[[noreturn]] void ParseError(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

const json& At(const json& j, const char* key) {
  if (!j.is_object()) ParseError(std::string("expected an object containing '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) ParseError(std::string("missing field '") + key + "'");
  return *it;
}

void CheckSchema(const json& j, const char* schema) {
  const json& tag = At(j, "schema");
  if (!tag.is_string() || tag.get<std::string>() != schema) {
    ParseError(std::string("expected schema ") + schema + ", got " + tag.dump());
  }
}

// Runs `body`, converting json library exceptions to Error(kParse).
template <typename F>
auto Guard(const std::string& what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    ParseError(what + ": " + e.what());
  }
}

template <int D>
json PoseJson(const Pose<D>& pose) {
  json rows = json::array();
  for (int i = 0; i < kNumJoints; ++i) {
    json row = json::array();
    for (int c = 0; c < D; ++c) row.push_back(pose.joints()(i, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd MatrixFromJson(const json& j, int dim) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(kNumJoints)) {
    ParseError("a pose must be an array of " + std::to_string(kNumJoints) + " joints");
  }
  Eigen::MatrixXd m(kNumJoints, dim);
  for (int i = 0; i < kNumJoints; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      ParseError("joint " + std::to_string(i) + " must have " + std::to_string(dim) +
                 " coordinates");
    }
    for (int c = 0; c < dim; ++c) {
      if (!row[c].is_number()) ParseError("joint coordinates must be numbers");
      m(i, c) = row[c].get<double>();
    }
  }
  return m;
}

template <int D>
Pose<D> PoseFromMatrix(const Eigen::MatrixXd& m) {
  if (m.rows() != kNumJoints || m.cols() != D) {
    throw Error(ErrorCode::kInvalidArgument, "pose matrix has the wrong shape");
  }
  typename Pose<D>::Matrix fixed = m;
  return Pose<D>(fixed);
}

json Vec3Json(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

Eigen::Vector3d Vec3FromJson(const json& j) {
  if (!j.is_array() || j.size() != 3) ParseError("expected an array of 3 numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

void WriteLine(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// Splits a JSONL stream into its header and record objects.
std::pair<json, std::vector<json>> ReadJsonLines(std::istream& in, const char* schema) {
  std::string line;
  int line_no = 0;
  std::optional<json> header;
  std::vector<json> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!header) {
      CheckSchema(j, schema);
      header = std::move(j);
    } else {
      records.push_back(std::move(j));
    }
  }
  if (!header) ParseError(std::string("empty file, expected a ") + schema + " header");
  return {std::move(*header), std::move(records)};
}

json HeaderJson(const char* schema, std::uint64_t seed, const std::string& config_hash) {
  return {{"schema", schema}, {"seed", seed}, {"config_hash", config_hash}};
}

json OptionalPose(const std::optional<Pose2D>& p) {
  return p ? ToJson(*p) : json(nullptr);
}

std::string StatusName(JobStatus s) { return s == JobStatus::kOk ? "ok" : "failed"; }

JobStatus StatusFromName(const std::string& s) {
  if (s == "ok") return JobStatus::kOk;
  if (s == "failed") return JobStatus::kFailed;
  ParseError("unknown job status '" + s + "'");
}

// Next whitespace-delimited header token of a netpbm stream, skipping
// comments.
std::string PnmToken(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      if (!tok.empty()) break;
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  if (tok.empty()) ParseError("truncated netpbm header");
  return tok;
}

int PnmInt(std::istream& in, const char* what) {
  const std::string tok = PnmToken(in);
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size() || v <= 0) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    ParseError(std::string("bad netpbm ") + what + ": " + tok);
  }
}

}  // namespace

// ---- JSON building blocks ----

json ToJson(const Pose3D& pose) { return PoseJson(pose); }
json ToJson(const Pose2D& pose) { return PoseJson(pose); }

json ToJson(const CameraPose& camera) {
  return {{"position", Vec3Json(camera.position)},
          {"look_at", Vec3Json(camera.look_at)},
          {"up", Vec3Json(camera.up)}};
}

Pose3D Pose3DFromJson(const json& j) {
  return Guard("pose", [&] { return PoseFromMatrix<3>(MatrixFromJson(j, 3)); });
}

Pose2D Pose2DFromJson(const json& j) {
  return Guard("pose", [&] { return PoseFromMatrix<2>(MatrixFromJson(j, 2)); });
}

CameraPose CameraFromJson(const json& j) {
  return Guard("camera", [&] {
    CameraPose c{Vec3FromJson(At(j, "position")), Vec3FromJson(At(j, "look_at")),
                 Vec3FromJson(At(j, "up"))};
    c.Validate();
    return c;
  });
}

// ---- Pose documents ----

std::vector<std::string> DefaultJointNames() {
  const Skeleton s = Skeleton::Human36M();
  return {s.joint_names.begin(), s.joint_names.end()};
}

bool operator==(const PoseDocument& a, const PoseDocument& b) {
  if (a.skeleton != b.skeleton || a.joint_names != b.joint_names || a.dim != b.dim ||
      a.ids != b.ids || a.cameras != b.cameras || a.metadata != b.metadata ||
      a.poses.size() != b.poses.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.poses.size(); ++i) {
    if (a.poses[i].rows() != b.poses[i].rows() || a.poses[i].cols() != b.poses[i].cols() ||
        a.poses[i] != b.poses[i]) {
      return false;
    }
  }
  return true;
}

PoseDocument MakePoseDocument(const std::vector<Pose3D>& poses) {
  PoseDocument doc;
  doc.dim = 3;
  for (const Pose3D& p : poses) doc.poses.emplace_back(p.joints());
  return doc;
}

PoseDocument MakePoseDocument(const std::vector<Pose2D>& poses) {
  PoseDocument doc;
  doc.dim = 2;
  for (const Pose2D& p : poses) doc.poses.emplace_back(p.joints());
  return doc;
}

std::vector<Pose3D> Poses3D(const PoseDocument& doc) {
  if (doc.dim != 3) throw Error(ErrorCode::kInvalidArgument, "expected a 3D pose document");
  std::vector<Pose3D> out;
  out.reserve(doc.poses.size());
  for (const auto& m : doc.poses) out.push_back(PoseFromMatrix<3>(m));
  return out;
}

std::vector<Pose2D> Poses2D(const PoseDocument& doc) {
  if (doc.dim != 2) throw Error(ErrorCode::kInvalidArgument, "expected a 2D pose document");
  std::vector<Pose2D> out;
  out.reserve(doc.poses.size());
  for (const auto& m : doc.poses) out.push_back(PoseFromMatrix<2>(m));
  return out;
}

json ToJson(const PoseDocument& doc) {
  if (doc.dim != 2 && doc.dim != 3) {
    throw Error(ErrorCode::kInvalidArgument, "pose dim must be 2 or 3");
  }
  if (!doc.ids.empty() && doc.ids.size() != doc.poses.size()) {
    throw Error(ErrorCode::kInvalidArgument, "ids must be empty or one per pose");
  }
  if (!doc.cameras.empty() && doc.cameras.size() != doc.poses.size()) {
    throw Error(ErrorCode::kInvalidArgument, "cameras must be empty or one per pose");
  }
  json poses = json::array();
  for (std::size_t i = 0; i < doc.poses.size(); ++i) {
    const Eigen::MatrixXd& m = doc.poses[i];
    if (m.rows() != kNumJoints || m.cols() != doc.dim) {
      throw Error(ErrorCode::kInvalidArgument, "pose matrix has the wrong shape");
    }
    json rows = json::array();
    for (int r = 0; r < kNumJoints; ++r) {
      json row = json::array();
      for (int c = 0; c < doc.dim; ++c) row.push_back(m(r, c));
      rows.push_back(std::move(row));
    }
    json entry = {{"joints", std::move(rows)}};
    if (!doc.ids.empty()) entry["id"] = doc.ids[i];
    if (!doc.cameras.empty()) {
      entry["camera"] = doc.cameras[i] ? ToJson(*doc.cameras[i]) : json(nullptr);
    }
    poses.push_back(std::move(entry));
  }
  return {{"schema", kPoseSchema},
          {"skeleton", doc.skeleton},
          {"joints", doc.joint_names},
          {"dim", doc.dim},
          {"metadata", doc.metadata},
          {"poses", std::move(poses)}};
}

PoseDocument PoseDocumentFromJson(const json& j) {
  return Guard("pose document", [&] {
    CheckSchema(j, kPoseSchema);
    PoseDocument doc;
    doc.skeleton = At(j, "skeleton").get<std::string>();
    doc.joint_names = At(j, "joints").get<std::vector<std::string>>();
    if (doc.skeleton != Skeleton::Human36M().name || doc.joint_names != DefaultJointNames()) {
      ParseError("unsupported skeleton '" + doc.skeleton + "' or joint order");
    }
    doc.dim = At(j, "dim").get<int>();
    if (doc.dim != 2 && doc.dim != 3) ParseError("pose dim must be 2 or 3");
    if (j.contains("metadata")) doc.metadata = j.at("metadata");
    const json& poses = At(j, "poses");
    if (!poses.is_array()) ParseError("'poses' must be an array");
    bool any_id = false;
    bool any_camera = false;
    for (const json& p : poses) {
      any_id = any_id || p.contains("id");
      any_camera = any_camera || p.contains("camera");
    }
    for (const json& p : poses) {
      const Eigen::MatrixXd m = MatrixFromJson(At(p, "joints"), doc.dim);
      // Validate via the pose types.
      if (doc.dim == 3) {
        PoseFromMatrix<3>(m);
      } else {
        PoseFromMatrix<2>(m);
      }
      doc.poses.push_back(m);
      if (any_id) doc.ids.push_back(At(p, "id").get<std::string>());
      if (any_camera) {
        const auto it = p.find("camera");
        if (it == p.end() || it->is_null()) {
          doc.cameras.emplace_back(std::nullopt);
        } else {
          doc.cameras.emplace_back(CameraFromJson(*it));
        }
      }
    }
    return doc;
  });
}

void WritePoseDocument(const std::filesystem::path& path, const PoseDocument& doc) {
  WriteTextFile(path, ToJson(doc).dump(1) + "\n");
}

PoseDocument ReadPoseDocument(const std::filesystem::path& path) {
  const std::string text = ReadTextFile(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    ParseError(path.string() + ": " + e.what());
  }
  return PoseDocumentFromJson(j);
}

PoseDocument NovelSetDocument(const NovelPoseSet& set, const std::string& config_hash) {
  PoseDocument doc = MakePoseDocument(set.poses());
  doc.metadata = {
      {"config_hash", config_hash},
      {"novel_set",
       {{"n_pos", set.config().n_pos},
        {"t_sim", set.config().t_sim},
        {"max_attempts", set.config().max_attempts}}},
      {"provenance",
       {{"generator_seed", set.provenance().generator_seed},
        {"schedule_id", set.provenance().schedule_id}}},
  };
  return doc;
}

NovelPoseSet NovelSetFromDocument(const PoseDocument& doc, const MetricContext& metric) {
  return Guard("novel pose set", [&] {
    if (doc.dim != 3) ParseError("a novel pose set must hold 3D poses");
    NovelSetConfig config;
    SetProvenance provenance;
    if (doc.metadata.contains("novel_set")) {
      const json& c = doc.metadata.at("novel_set");
      config.n_pos = At(c, "n_pos").get<int>();
      config.t_sim = At(c, "t_sim").get<double>();
      config.max_attempts = At(c, "max_attempts").get<int>();
    } else {
      config.n_pos = static_cast<int>(std::max<std::size_t>(1, doc.poses.size()));
    }
    if (doc.metadata.contains("provenance")) {
      const json& p = doc.metadata.at("provenance");
      provenance.generator_seed = At(p, "generator_seed").get<std::uint64_t>();
      provenance.schedule_id = At(p, "schedule_id").get<std::string>();
    }
    NovelPoseSet set(config, metric, provenance);
    for (Pose3D& p : Poses3D(doc)) set.AppendUnchecked(std::move(p));
    return set;
  });
}

// ---- Sources ----

json ToJson(const SourceRecord& s) {
  return {{"image_ref", s.image_ref},
          {"estimated_pose", ToJson(s.estimated_pose)},
          {"camera", ToJson(s.camera)},
          {"human_mask_ref", s.human_mask_ref},
          {"size", {s.size.width, s.size.height}}};
}

SourceRecord SourceFromJson(const json& j) {
  return Guard("source record", [&] {
    const json& size = At(j, "size");
    if (!size.is_array() || size.size() != 2) ParseError("size must be [width, height]");
    SourceRecord s{At(j, "image_ref").get<std::string>(),
                   Pose2DFromJson(At(j, "estimated_pose")),
                   CameraFromJson(At(j, "camera")),
                   j.value("human_mask_ref", std::string()),
                   {size[0].get<int>(), size[1].get<int>()}};
    s.Validate();
    return s;
  });
}

void WriteSources(const std::filesystem::path& path,
                  const std::vector<SourceRecord>& sources) {
  json list = json::array();
  for (const auto& s : sources) list.push_back(ToJson(s));
  WriteTextFile(path, json{{"schema", kSourcesSchema}, {"sources", std::move(list)}}.dump(1) + "\n");
}

std::vector<SourceRecord> ReadSources(const std::filesystem::path& path) {
  const std::string text = ReadTextFile(path);
  return Guard(path.string(), [&] {
    const json j = json::parse(text);
    CheckSchema(j, kSourcesSchema);
    std::vector<SourceRecord> out;
    for (const json& s : At(j, "sources")) out.push_back(SourceFromJson(s));
    return out;
  });
}

// ---- Manifest ----

void WriteManifest(std::ostream& out, const TranslationManifest& m) {
  json header = HeaderJson(kManifestSchema, m.seed, m.config_hash);
  header["config"] = m.config_json.empty() ? json(nullptr) : json::parse(m.config_json);
  header["jobs"] = m.jobs.size();
  header["failures"] = m.failures.size();
  WriteLine(out, header);
  for (const TranslationJob& job : m.jobs) {
    json steps = json::array();
    for (const TargetStep& s : job.steps) {
      steps.push_back({{"set_index", s.set_index},
                       {"pose3d", ToJson(s.pose3d)},
                       {"pose2d", ToJson(s.pose2d)}});
    }
    WriteLine(out, {{"type", "job"},
                    {"job_id", job.job_id},
                    {"source_ref", job.source_ref},
                    {"final_index", job.final_index},
                    {"sequence_index", job.sequence_index},
                    {"seed", job.seed},
                    {"objective", job.objective},
                    {"steps", std::move(steps)}});
  }
  for (const PlanFailure& f : m.failures) {
    WriteLine(out, {{"type", "failure"},
                    {"source_ref", f.source_ref},
                    {"code", f.code},
                    {"message", f.message}});
  }
}

TranslationManifest ReadManifest(std::istream& in) {
  auto [header, records] = ReadJsonLines(in, kManifestSchema);
  return Guard("manifest", [&] {
    TranslationManifest m;
    m.seed = At(header, "seed").get<std::uint64_t>();
    m.config_hash = At(header, "config_hash").get<std::string>();
    const json& config = At(header, "config");
    m.config_json = config.is_null() ? std::string() : config.dump();
    for (const json& r : records) {
      const std::string type = At(r, "type").get<std::string>();
      if (type == "job") {
        TranslationJob job;
        job.job_id = At(r, "job_id").get<std::string>();
        job.source_ref = At(r, "source_ref").get<std::string>();
        job.final_index = At(r, "final_index").get<std::size_t>();
        job.sequence_index = At(r, "sequence_index").get<int>();
        job.seed = At(r, "seed").get<std::uint64_t>();
        job.objective = At(r, "objective").get<double>();
        for (const json& s : At(r, "steps")) {
          job.steps.push_back(TargetStep{At(s, "set_index").get<std::size_t>(),
                                         Pose3DFromJson(At(s, "pose3d")),
                                         Pose2DFromJson(At(s, "pose2d"))});
        }
        m.jobs.push_back(std::move(job));
      } else if (type == "failure") {
        m.failures.push_back(PlanFailure{At(r, "source_ref").get<std::string>(),
                                         At(r, "code").get<std::string>(),
                                         At(r, "message").get<std::string>()});
      } else {
        ParseError("unknown manifest record type '" + type + "'");
      }
    }
    if (m.jobs.size() != At(header, "jobs").get<std::size_t>() ||
        m.failures.size() != At(header, "failures").get<std::size_t>()) {
      ParseError("manifest record count does not match its header");
    }
    return m;
  });
}

// ---- Results ----

void WriteResults(std::ostream& out, const ResultsFile& file) {
  json header = HeaderJson(kResultsSchema, file.seed, file.config_hash);
  header["jobs"] = file.results.size();
  WriteLine(out, header);
  for (const JobResult& r : file.results) {
    json steps = json::array();
    for (const StepResult& s : r.steps) {
      steps.push_back({{"step", s.step},
                       {"set_index", s.set_index},
                       {"generated_ref", s.generated_ref},
                       {"target2d", ToJson(s.target2d)},
                       {"estimated2d", OptionalPose(s.estimated2d)}});
    }
    WriteLine(out, {{"job_id", r.job_id},
                    {"source_ref", r.source_ref},
                    {"status", StatusName(r.status)},
                    {"failed_at", r.failed_at},
                    {"failure_message", r.failure_message},
                    {"steps", std::move(steps)}});
  }
}

ResultsFile ReadResults(std::istream& in) {
  auto [header, records] = ReadJsonLines(in, kResultsSchema);
  return Guard("results", [&] {
    ResultsFile file;
    file.seed = At(header, "seed").get<std::uint64_t>();
    file.config_hash = At(header, "config_hash").get<std::string>();
    for (const json& r : records) {
      JobResult result;
      result.job_id = At(r, "job_id").get<std::string>();
      result.source_ref = At(r, "source_ref").get<std::string>();
      result.status = StatusFromName(At(r, "status").get<std::string>());
      result.failed_at = At(r, "failed_at").get<int>();
      result.failure_message = At(r, "failure_message").get<std::string>();
      for (const json& s : At(r, "steps")) {
        const json& est = At(s, "estimated2d");
        result.steps.push_back(StepResult{
            At(s, "step").get<int>(), At(s, "set_index").get<std::size_t>(),
            At(s, "generated_ref").get<std::string>(), Pose2DFromJson(At(s, "target2d")),
            est.is_null() ? std::nullopt : std::optional<Pose2D>(Pose2DFromJson(est))});
      }
      file.results.push_back(std::move(result));
    }
    if (file.results.size() != At(header, "jobs").get<std::size_t>()) {
      ParseError("results record count does not match its header");
    }
    return file;
  });
}

// ---- Filter report ----

void WriteFilterReport(std::ostream& out, const FilterFile& report) {
  json header = HeaderJson(kFilterSchema, report.seed, report.config_hash);
  header["t_filt"] = report.t_filt;
  header["decisions"] = report.decisions.size();
  header["kept"] = CountKept(report.decisions);
  WriteLine(out, header);
  for (const FilterDecision& d : report.decisions) {
    WriteLine(out, {{"job_id", d.job_id},
                    {"step", d.step},
                    {"generated_ref", d.generated_ref},
                    {"distance", d.distance ? json(*d.distance) : json(nullptr)},
                    {"kept", d.kept},
                    {"reason", d.reason}});
  }
}

FilterFile ReadFilterReport(std::istream& in) {
  auto [header, records] = ReadJsonLines(in, kFilterSchema);
  return Guard("filter report", [&] {
    FilterFile file;
    file.seed = At(header, "seed").get<std::uint64_t>();
    file.config_hash = At(header, "config_hash").get<std::string>();
    file.t_filt = At(header, "t_filt").get<double>();
    for (const json& r : records) {
      const json& dist = At(r, "distance");
      file.decisions.push_back(FilterDecision{
          At(r, "job_id").get<std::string>(), At(r, "step").get<int>(),
          At(r, "generated_ref").get<std::string>(),
          dist.is_null() ? std::nullopt : std::optional<double>(dist.get<double>()),
          At(r, "kept").get<bool>(), At(r, "reason").get<std::string>()});
    }
    if (file.decisions.size() != At(header, "decisions").get<std::size_t>()) {
      ParseError("filter record count does not match its header");
    }
    return file;
  });
}

// ---- Placements ----

void WritePlacements(std::ostream& out, const PlacementFile& file) {
  json header = HeaderJson(kPlacementSchema, file.seed, file.config_hash);
  header["specs"] = file.specs.size();
  WriteLine(out, header);
  for (const PlacementSpec& spec : file.specs) {
    json humans = json::array();
    for (const HumanPlacement& h : spec.humans) {
      humans.push_back({{"ref", h.ref},
                        {"box", {h.box.x, h.box.y, h.box.w, h.box.h}},
                        {"scale", h.scale},
                        {"z_order", h.z_order}});
    }
    WriteLine(out, {{"background_ref", spec.background_ref},
                    {"canvas", {spec.canvas_width, spec.canvas_height}},
                    {"humans", std::move(humans)}});
  }
}

PlacementFile ReadPlacements(std::istream& in) {
  auto [header, records] = ReadJsonLines(in, kPlacementSchema);
  return Guard("placements", [&] {
    PlacementFile file;
    file.seed = At(header, "seed").get<std::uint64_t>();
    file.config_hash = At(header, "config_hash").get<std::string>();
    for (const json& r : records) {
      PlacementSpec spec;
      spec.background_ref = At(r, "background_ref").get<std::string>();
      const auto canvas = At(r, "canvas").get<std::vector<int>>();
      if (canvas.size() != 2) ParseError("canvas must be [width, height]");
      spec.canvas_width = canvas[0];
      spec.canvas_height = canvas[1];
      for (const json& h : At(r, "humans")) {
        const auto box = At(h, "box").get<std::vector<int>>();
        if (box.size() != 4) ParseError("box must be [x, y, w, h]");
        spec.humans.push_back(HumanPlacement{At(h, "ref").get<std::string>(),
                                             Box{box[0], box[1], box[2], box[3]},
                                             At(h, "scale").get<double>(),
                                             At(h, "z_order").get<int>()});
      }
      file.specs.push_back(std::move(spec));
    }
    if (file.specs.size() != At(header, "specs").get<std::size_t>()) {
      ParseError("placement record count does not match its header");
    }
    return file;
  });
}

// ---- Denoiser ----

void WriteDenoiser(const std::filesystem::path& path, const ToyDenoiser& denoiser,
                   const json& metadata) {
  const ToyDenoiser::Shape& s = denoiser.shape();
  const json j = {{"schema", kDenoiserSchema},
                  {"shape",
                   {{"input", s.input}, {"time", s.time}, {"hidden", s.hidden}, {"output", s.output}}},
                  {"metadata", metadata},
                  {"params", denoiser.Parameters()}};
  WriteTextFile(path, j.dump() + "\n");
}

ToyDenoiser ReadDenoiser(const std::filesystem::path& path) {
  const std::string text = ReadTextFile(path);
  return Guard(path.string(), [&] {
    const json j = json::parse(text);
    CheckSchema(j, kDenoiserSchema);
    const json& shape = At(j, "shape");
    const int hidden = At(shape, "hidden").get<int>();
    if (hidden < 1) ParseError("hidden width must be positive");
    ToyDenoiser d(hidden);
    const ToyDenoiser::Shape expected = d.shape();
    if (At(shape, "input").get<int>() != expected.input ||
        At(shape, "time").get<int>() != expected.time ||
        At(shape, "output").get<int>() != expected.output) {
      ParseError("denoiser shape does not match this build");
    }
    const auto params = At(j, "params").get<std::vector<double>>();
    if (params.size() != d.ParameterCount()) ParseError("wrong number of denoiser parameters");
    d.SetParameters(params);
    return d;
  });
}

// ---- Images ----

void WritePbm(std::ostream& out, const BinaryMask& mask) {
  out << "P1\n# posediv.mask/1\n" << mask.width() << ' ' << mask.height() << '\n';
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (x) out << ' ';
      out << (mask.Get(x, y) ? '1' : '0');
    }
    out << '\n';
  }
}

BinaryMask ReadPbm(std::istream& in) {
  if (PnmToken(in) != "P1") ParseError("expected a plain PBM (P1)");
  const int w = PnmInt(in, "width");
  const int h = PnmInt(in, "height");
  BinaryMask mask(w, h);
  long long i = 0;
  const long long n = static_cast<long long>(w) * h;
  int c;
  while (i < n && (c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
    } else if (c == '0' || c == '1') {
      mask.Set(static_cast<int>(i % w), static_cast<int>(i / w), c == '1');
      ++i;
    } else if (!std::isspace(c)) {
      ParseError("unexpected character in PBM data");
    }
  }
  if (i != n) ParseError("truncated PBM data");
  return mask;
}

void WritePpm(std::ostream& out, const Raster& raster, bool binary) {
  out << (binary ? "P6" : "P3") << '\n' << raster.width << ' ' << raster.height << "\n255\n";
  if (binary) {
    for (const Rgb& p : raster.pixels) {
      out.write(reinterpret_cast<const char*>(p.data()), 3);
    }
    return;
  }
  for (int y = 0; y < raster.height; ++y) {
    for (int x = 0; x < raster.width; ++x) {
      const Rgb& p = raster.at(x, y);
      out << (x ? " " : "") << int{p[0]} << ' ' << int{p[1]} << ' ' << int{p[2]};
    }
    out << '\n';
  }
}

Raster ReadPpm(std::istream& in) {
  const std::string magic = PnmToken(in);
  if (magic != "P3" && magic != "P6") ParseError("expected a PPM (P3 or P6)");
  const int w = PnmInt(in, "width");
  const int h = PnmInt(in, "height");
  if (PnmInt(in, "maxval") != 255) ParseError("only maxval 255 is supported");
  Raster raster(w, h, Rgb{0, 0, 0});
  if (magic == "P6") {
    for (Rgb& p : raster.pixels) {
      if (!in.read(reinterpret_cast<char*>(p.data()), 3)) ParseError("truncated PPM data");
    }
    return raster;
  }
  for (Rgb& p : raster.pixels) {
    for (int c = 0; c < 3; ++c) {
      int v = -1;
      if (!(in >> v) || v < 0 || v > 255) ParseError("bad PPM sample");
      p[c] = static_cast<std::uint8_t>(v);
    }
  }
  return raster;
}

// ---- Size table ----

void WriteSizeTable(std::ostream& out, const std::vector<SizeEntry>& table) {
  out << "# " << kSizeTableSchema << "\nwidth,height\n";
  for (const SizeEntry& e : table) out << e.width << ',' << e.height << '\n';
}

std::vector<SizeEntry> ReadSizeTable(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool header = false;
  bool tagged = false;
  std::vector<SizeEntry> table;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line == std::string("# ") + kSizeTableSchema) tagged = true;
      continue;
    }
    if (!header) {
      if (line != "width,height") ParseError("size table header must be 'width,height'");
      header = true;
      continue;
    }
    std::istringstream row(line);
    SizeEntry e;
    char comma = 0;
    if (!(row >> e.width >> comma >> e.height) || comma != ',' || !(row >> std::ws).eof()) {
      ParseError("size table line " + std::to_string(line_no) + " is malformed");
    }
    if (e.width <= 0 || e.height <= 0) {
      ParseError("size table line " + std::to_string(line_no) + " must be positive");
    }
    table.push_back(e);
  }
  if (!tagged) ParseError(std::string("missing '# ") + kSizeTableSchema + "' tag");
  if (!header) ParseError("size table has no header");
  return table;
}

// ---- Files ----

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace posediv
