// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/io/config.h"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <utility>

#include "posediv/error.h"
#include "posediv/io/formats.h"
#include "posediv/io/hash.h"
#include "posediv/pipeline/seeding.h"

namespace posediv {
namespace {

using nlohmann::json;

template <typename E>
using EnumTable = std::vector<std::pair<const char*, E>>;

const EnumTable<GeneratorKind> kGenerators = {
    {"articulated", GeneratorKind::kArticulated},
    {"denoiser", GeneratorKind::kDenoiser},
    {"pool", GeneratorKind::kPool}};
const EnumTable<DeepRegime> kRegimes = {{"3d", DeepRegime::k3D},
                                        {"projected_2d", DeepRegime::kProjected2D}};
const EnumTable<ProjectionMode> kProjections = {
    {"weak_perspective", ProjectionMode::kWeakPerspective},
    {"pinhole", ProjectionMode::kPinhole}};
const EnumTable<AdapterKind> kAdapters = {{"mock", AdapterKind::kMock},
                                          {"command", AdapterKind::kCommand}};
const EnumTable<LowerRule> kLowerRules = {{"bottom_edge", LowerRule::kBottomEdge},
                                          {"center_y", LowerRule::kCenterY}};
const EnumTable<CanonicalPoseKind> kPoseKinds = {
    {"standing", CanonicalPoseKind::kStanding},
    {"arms_raised", CanonicalPoseKind::kArmsRaised},
    {"squat_reach", CanonicalPoseKind::kSquatReach}};

template <typename E>
const char* NameOf(const EnumTable<E>& table, E value) {
  for (const auto& [name, v] : table) {
    if (v == value) return name;
  }
  throw Error(ErrorCode::kInvalidArgument, "unnamed enum value");
}

[[noreturn]] void TypeError(const std::string& key, const char* expected) {
  throw Error(ErrorCode::kParse, key + ": expected " + expected);
}

// Reads keys by name and remembers which ones were consumed.
class Reader {
 public:
  explicit Reader(const json& j) : j_(j) {}

  void Int(const char* key, int* out) {
    if (const json* v = Take(key)) {
      if (!v->is_number_integer()) TypeError(key, "an integer");
      const auto x = v->get<long long>();
      if (x < INT32_MIN || x > INT32_MAX) {
        throw Error(ErrorCode::kRange, std::string(key) + " is out of range");
      }
      *out = static_cast<int>(x);
    }
  }
  void Seed(const char* key, std::uint64_t* out) {
    if (const json* v = Take(key)) {
      if (v->is_number_unsigned()) {
        *out = v->get<std::uint64_t>();
      } else if (v->is_number_integer()) {
        throw Error(ErrorCode::kRange, std::string(key) + " must be non-negative");
      } else {
        TypeError(key, "a non-negative integer");
      }
    }
  }
  void Double(const char* key, double* out) {
    if (const json* v = Take(key)) {
      if (!v->is_number()) TypeError(key, "a number");
      *out = v->get<double>();
    }
  }
  void Bool(const char* key, bool* out) {
    if (const json* v = Take(key)) {
      if (!v->is_boolean()) TypeError(key, "a boolean");
      *out = v->get<bool>();
    }
  }
  void String(const char* key, std::string* out) {
    if (const json* v = Take(key)) {
      if (!v->is_string()) TypeError(key, "a string");
      *out = v->get<std::string>();
    }
  }
  template <typename E>
  void Enum(const char* key, const EnumTable<E>& table, E* out) {
    if (const json* v = Take(key)) {
      if (!v->is_string()) TypeError(key, "a string");
      *out = Lookup(key, table, v->get<std::string>());
    }
  }
  void Vec3(const char* key, Eigen::Vector3d* out) {
    if (const json* v = Take(key)) {
      if (!v->is_array() || v->size() != 3) TypeError(key, "an array of 3 numbers");
      for (int i = 0; i < 3; ++i) {
        if (!(*v)[i].is_number()) TypeError(key, "an array of 3 numbers");
        (*out)[i] = (*v)[i].get<double>();
      }
    }
  }
  void Color(const char* key, Rgb* out) {
    if (const json* v = Take(key)) {
      if (!v->is_array() || v->size() != 3) TypeError(key, "an array of 3 integers");
      for (int i = 0; i < 3; ++i) {
        if (!(*v)[i].is_number_integer()) TypeError(key, "an array of 3 integers");
        const auto c = (*v)[i].get<long long>();
        if (c < 0 || c > 255) {
          throw Error(ErrorCode::kRange, std::string(key) + " components must lie in [0, 255]");
        }
        (*out)[i] = static_cast<std::uint8_t>(c);
      }
    }
  }
  void Modes(const char* key, std::vector<CanonicalPoseKind>* out) {
    if (const json* v = Take(key)) {
      if (!v->is_array()) TypeError(key, "an array of pose names");
      out->clear();
      for (const json& e : *v) {
        if (!e.is_string()) TypeError(key, "an array of pose names");
        out->push_back(Lookup(key, kPoseKinds, e.get<std::string>()));
      }
    }
  }

  void RejectUnknown() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.count(key)) throw Error(ErrorCode::kParse, "unknown config key: " + key);
    }
  }

 private:
  const json* Take(const char* key) {
    seen_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  template <typename E>
  static E Lookup(const std::string& key, const EnumTable<E>& table,
                  const std::string& name) {
    for (const auto& [n, v] : table) {
      if (name == n) return v;
    }
    std::string allowed;
    for (const auto& [n, v] : table) allowed += (allowed.empty() ? "" : ", ") + std::string(n);
    throw Error(ErrorCode::kRange, key + ": unknown value '" + name + "' (allowed: " + allowed + ")");
  }

  const json& j_;
  std::set<std::string> seen_;
};

void Require(bool ok, const char* field, const std::string& rule) {
  if (!ok) throw Error(ErrorCode::kRange, std::string(field) + " must " + rule);
}

bool Finite(double x) { return std::isfinite(x); }

}  // namespace

void PipelineConfig::Validate() const {
  Require(n_pos >= 1, "n_pos", "be >= 1");
  Require(Finite(t_sim) && t_sim > 0.0 && t_sim < 2.0, "t_sim", "lie in (0, 2)");
  Require(max_attempts >= 1, "max_attempts", "be >= 1");
  Require(Finite(max_bone_angle) && max_bone_angle >= 0.0 &&
              max_bone_angle <= std::numbers::pi,
          "max_bone_angle", "lie in [0, pi]");
  Require(k >= 1 && k <= 16, "k", "lie in [1, 16]");
  Require(n_max >= 1 && n_max <= 64, "n_max", "lie in [1, 64]");
  Require(finals_per_source >= 1, "finals_per_source", "be >= 1");
  Require(Finite(t_filt) && t_filt >= 0.0 && t_filt <= 2.0, "t_filt", "lie in [0, 2]");
  Require(schedule_steps >= 1, "schedule_steps", "be >= 1");
  Require(Finite(beta_min) && beta_min > 0.0 && beta_min < 1.0, "beta_min", "lie in (0, 1)");
  Require(Finite(beta_max) && beta_max >= beta_min && beta_max < 1.0, "beta_max",
          "lie in [beta_min, 1)");
  Require(denoiser_hidden >= 1, "denoiser_hidden", "be >= 1");
  Require(train_iterations >= 0, "train_iterations", "be >= 0");
  Require(train_batch >= 1, "train_batch", "be >= 1");
  Require(Finite(learning_rate) && learning_rate > 0.0, "learning_rate", "be > 0");
  Require(train_samples >= 1, "train_samples", "be >= 1");
  Require(Finite(train_sigma) && train_sigma >= 0.0, "train_sigma", "be >= 0");
  Require(!train_modes.empty(), "train_modes", "name at least one pose");
  Require(world_up.allFinite() && world_up.norm() > 0.0, "world_up", "be a finite nonzero vector");
  Require(Finite(focal_length) && focal_length > 0.0, "focal_length", "be > 0");
  Require(Finite(mock_noise) && mock_noise >= 0.0, "mock_noise", "be >= 0");
  Require(mock_fail_at_step >= 0, "mock_fail_at_step", "be >= 0");
  Require(adapter != AdapterKind::kCommand || !adapter_command.empty(), "adapter_command",
          "be set when adapter is \"command\"");
  Require(workers >= 1 && workers <= 256, "workers", "lie in [1, 256]");
  Require(render_width > 16, "render_width", "be > 16");
  Require(render_height > 16, "render_height", "be > 16");
  Require(Finite(mask_tolerance) && mask_tolerance >= 0.0, "mask_tolerance", "be >= 0");
  Require(canvas_width >= 1, "canvas_width", "be >= 1");
  Require(canvas_height >= 1, "canvas_height", "be >= 1");
  Require(placement_max_tries >= 1, "placement_max_tries", "be >= 1");
}

NovelSetConfig PipelineConfig::NovelSet() const { return {n_pos, t_sim, max_attempts}; }

SearchConfig PipelineConfig::Search() const {
  SearchConfig s;
  s.k = k;
  s.n_max = n_max;
  s.finals_per_source = finals_per_source;
  s.deep_regime = deep_regime;
  s.prune = prune;
  return s;
}

NoiseSchedule PipelineConfig::Schedule() const {
  return NoiseSchedule::Linear(schedule_steps, beta_min, beta_max);
}

TrainingConfig PipelineConfig::Training() const {
  TrainingConfig t;
  t.hidden = denoiser_hidden;
  t.iterations = train_iterations;
  t.batch_size = train_batch;
  t.learning_rate = learning_rate;
  t.seed = DeriveSeed(seed, "train");
  return t;
}

MetricContext PipelineConfig::Metric() const {
  MetricContext m;
  m.up = world_up.normalized();
  m.projection.mode = projection;
  m.projection.focal_length = focal_length;
  return m;
}

PlacementOptions PipelineConfig::Placement() const {
  return {placement_max_tries, lower_rule};
}

MockOptions PipelineConfig::Mock() const {
  MockOptions m;
  m.noise = mock_noise;
  m.fail_at_step = mock_fail_at_step;
  m.render_width = render_width;
  m.render_height = render_height;
  m.background = mono_color;
  return m;
}

nlohmann::json PipelineConfig::ToJson() const {
  json modes = json::array();
  for (CanonicalPoseKind m : train_modes) modes.push_back(NameOf(kPoseKinds, m));
  return {
      {"seed", seed},
      {"n_pos", n_pos},
      {"t_sim", t_sim},
      {"max_attempts", max_attempts},
      {"generator", NameOf(kGenerators, generator)},
      {"max_bone_angle", max_bone_angle},
      {"k", k},
      {"n_max", n_max},
      {"finals_per_source", finals_per_source},
      {"deep_regime", NameOf(kRegimes, deep_regime)},
      {"prune", prune},
      {"t_filt", t_filt},
      {"schedule_steps", schedule_steps},
      {"beta_min", beta_min},
      {"beta_max", beta_max},
      {"denoiser_hidden", denoiser_hidden},
      {"train_iterations", train_iterations},
      {"train_batch", train_batch},
      {"learning_rate", learning_rate},
      {"train_samples", train_samples},
      {"train_sigma", train_sigma},
      {"train_modes", modes},
      {"world_up", {world_up.x(), world_up.y(), world_up.z()}},
      {"projection", NameOf(kProjections, projection)},
      {"focal_length", focal_length},
      {"adapter", NameOf(kAdapters, adapter)},
      {"mock_noise", mock_noise},
      {"mock_fail_at_step", mock_fail_at_step},
      {"adapter_command", adapter_command},
      {"workers", workers},
      {"render_width", render_width},
      {"render_height", render_height},
      {"mono_color", {mono_color[0], mono_color[1], mono_color[2]}},
      {"mask_tolerance", mask_tolerance},
      {"canvas_width", canvas_width},
      {"canvas_height", canvas_height},
      {"placement_max_tries", placement_max_tries},
      {"lower_rule", NameOf(kLowerRules, lower_rule)},
      {"occlusion", occlusion},
  };
}

std::string PipelineConfig::Hash() const { return ConfigHash(ToJson()); }

PipelineConfig ConfigFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "config must be a JSON object");
  PipelineConfig c;
  Reader r(j);
  r.Seed("seed", &c.seed);
  r.Int("n_pos", &c.n_pos);
  r.Double("t_sim", &c.t_sim);
  r.Int("max_attempts", &c.max_attempts);
  r.Enum("generator", kGenerators, &c.generator);
  r.Double("max_bone_angle", &c.max_bone_angle);
  r.Int("k", &c.k);
  r.Int("n_max", &c.n_max);
  r.Int("finals_per_source", &c.finals_per_source);
  r.Enum("deep_regime", kRegimes, &c.deep_regime);
  r.Bool("prune", &c.prune);
  r.Double("t_filt", &c.t_filt);
  r.Int("schedule_steps", &c.schedule_steps);
  r.Double("beta_min", &c.beta_min);
  r.Double("beta_max", &c.beta_max);
  r.Int("denoiser_hidden", &c.denoiser_hidden);
  r.Int("train_iterations", &c.train_iterations);
  r.Int("train_batch", &c.train_batch);
  r.Double("learning_rate", &c.learning_rate);
  r.Int("train_samples", &c.train_samples);
  r.Double("train_sigma", &c.train_sigma);
  r.Modes("train_modes", &c.train_modes);
  r.Vec3("world_up", &c.world_up);
  r.Enum("projection", kProjections, &c.projection);
  r.Double("focal_length", &c.focal_length);
  r.Enum("adapter", kAdapters, &c.adapter);
  r.Double("mock_noise", &c.mock_noise);
  r.Int("mock_fail_at_step", &c.mock_fail_at_step);
  r.String("adapter_command", &c.adapter_command);
  r.Int("workers", &c.workers);
  r.Int("render_width", &c.render_width);
  r.Int("render_height", &c.render_height);
  r.Color("mono_color", &c.mono_color);
  r.Double("mask_tolerance", &c.mask_tolerance);
  r.Int("canvas_width", &c.canvas_width);
  r.Int("canvas_height", &c.canvas_height);
  r.Int("placement_max_tries", &c.placement_max_tries);
  r.Enum("lower_rule", kLowerRules, &c.lower_rule);
  r.Bool("occlusion", &c.occlusion);
  r.RejectUnknown();
  c.Validate();
  return c;
}

PipelineConfig ParseConfig(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    PipelineConfig c;
    c.Validate();
    return c;
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("config is not valid JSON: ") + e.what());
  }
  return ConfigFromJson(j);
}

PipelineConfig LoadConfig(const std::filesystem::path& path) {
  return ParseConfig(ReadTextFile(path));
}

std::string ToString(CanonicalPoseKind kind) { return NameOf(kPoseKinds, kind); }

CanonicalPoseKind CanonicalPoseKindFromString(const std::string& s) {
  for (const auto& [n, v] : kPoseKinds) {
    if (s == n) return v;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown pose kind: " + s);
}

}  // namespace posediv
